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
#ifndef ORTHOLAT_RANDOM_HPP_
#define ORTHOLAT_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "ortholat/matrix.hpp"

namespace ortholat {

/// Sub-seed for trial `index` of a run seeded with `master`. A fixed
/// splitmix64 finalizer, so results never depend on scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seeded generator. Uniform and normal variates are computed from raw
/// mt19937_64 output so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi].
  std::size_t index(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(uniform() * static_cast<double>(hi - lo + 1));
  }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Standard normal by Box-Muller.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Complex normal with E|z|^2 = 1.
  Complex complex_normal() {
    constexpr double kScale = 1.0 / std::numbers::sqrt2;
    const double re = normal();
    const double im = normal();
    return {re * kScale, im * kScale};
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Matrix with iid standard complex Gaussian entries.
inline ComplexMatrix random_ginibre(std::size_t n, Rng& rng) {
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  }
  return g;
}

/// Haar-distributed unitary: Gram-Schmidt on the columns of a Ginibre matrix.
inline ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  ComplexMatrix q = random_ginibre(n, rng);
  for (std::size_t j = 0; j < n; ++j) {
    // Two passes of modified Gram-Schmidt keep columns orthonormal to ~eps.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        Complex dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * q(i, j);
        for (std::size_t i = 0; i < n; ++i) q(i, j) -= dot * q(i, k);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

/// GUE-like Hermitian sample with entries of order one.
inline HermitianMatrix random_hermitian(std::size_t n, Rng& rng) {
  return HermitianMatrix(random_ginibre(n, rng));
}

/// U diag(d) U* for a given unitary.
inline HermitianMatrix conjugate_diagonal(const ComplexMatrix& u, std::span<const double> d) {
  return HermitianMatrix(u * HermitianMatrix::diagonal(d) * u.adjoint());
}

/// Random positive semidefinite matrix U diag(t) U*, t_i uniform in [0, scale).
inline HermitianMatrix random_psd(std::size_t n, Rng& rng, double scale = 1.0) {
  std::vector<double> t(n);
  for (double& x : t) x = scale * rng.uniform();
  return conjugate_diagonal(random_unitary(n, rng), t);
}

}  // namespace ortholat

#endif  // ORTHOLAT_RANDOM_HPP_
