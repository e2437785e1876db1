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
// Ortho-infimum of two non-comparable projections, and a common lower bound
// that is not below it.

#include <cstdio>

#include "ortholat/ortholat.hpp"

int main() {
  using namespace ortholat;
  const HermitianMatrix s = HermitianMatrix::diagonal({1.0, 0.0});
  const HermitianMatrix t{{0.5, 0.5}, {0.5, 0.5}};

  const HermitianMatrix c = ortho_inf(s, t);
  std::printf("c = [[%.6f, %.6f], [%.6f, %.6f]]\n", c(0, 0).real(), c(0, 1).real(), c(1, 0).real(), c(1, 1).real());
  std::printf("ortho-infimum checks hold: %s\n", verify_theorem4(s, t).holds ? "yes" : "no");

  const WitnessResult w = kadison_witness_search(s, t, WitnessOptions{.iters = 500, .restarts = 4});
  std::printf("lower bound m with m not <= c: %s (lambda_min(c - m) = %.4f)\n", w.found ? "found" : "not found",
              -w.margin);
  return w.found ? 0 : 1;
}
