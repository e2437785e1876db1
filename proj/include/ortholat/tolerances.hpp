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

#ifndef ORTHOLAT_TOLERANCES_HPP_
#define ORTHOLAT_TOLERANCES_HPP_

#include <string>

#include "ortholat/error.hpp"

namespace ortholat {

/// Named thresholds for every approximate equality in the library.
///
/// All matrix equalities are relative Frobenius comparisons
/// `||X - Y||_F <= tol_eq * max(1, ||X||_F, ||Y||_F)`, and a product counts
/// as zero when `||ab||_F <= tol_zero * max(1, ||a||_F * ||b||_F)`.
struct Tolerances {
  double tol_eig = 1e-12;   ///< Jacobi off-diagonal threshold, relative to ||a||_F.
  double tol_zero = 1e-9;   ///< zero-product threshold.
  double tol_psd = 1e-9;    ///< cone-membership slack, relative to max(1, ||a||).
  double tol_eq = 1e-9;     ///< matrix equality threshold.
  int max_sweeps = 100;

  void validate() const {
    if (!(tol_eig > 0 && tol_zero > 0 && tol_psd > 0 && tol_eq > 0)) {
      throw InvalidInput("tolerances must be strictly positive");
    }
    if (max_sweeps < 1) throw InvalidInput("max_sweeps must be at least 1");
  }
};

namespace detail {
inline Tolerances& default_tolerances_storage() {
  static Tolerances tol;
  return tol;
}
}  // namespace detail

/// Process-wide defaults. Set once, before any computation starts.
inline const Tolerances& default_tolerances() { return detail::default_tolerances_storage(); }

inline void set_default_tolerances(const Tolerances& tol) {
  tol.validate();
  detail::default_tolerances_storage() = tol;
}

}  // namespace ortholat

#endif  // ORTHOLAT_TOLERANCES_HPP_
