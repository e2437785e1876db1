// Copyright 2026 The ortholat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef ORTHOLAT_ORTHOLAT_HPP_
#define ORTHOLAT_ORTHOLAT_HPP_

#include "ortholat/error.hpp"
#include "ortholat/tolerances.hpp"
#include "ortholat/matrix.hpp"
#include "ortholat/random.hpp"
#include "ortholat/spectral.hpp"
#include "ortholat/report.hpp"
#include "ortholat/orthogonality.hpp"
#include "ortholat/ortholattice.hpp"
#include "ortholat/lattice_model.hpp"
#include "ortholat/axioms.hpp"
#include "ortholat/generators.hpp"

#endif  // ORTHOLAT_ORTHOLAT_HPP_
