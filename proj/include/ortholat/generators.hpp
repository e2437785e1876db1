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
#ifndef ORTHOLAT_GENERATORS_HPP_
#define ORTHOLAT_GENERATORS_HPP_

#include <utility>
#include <vector>

#include "ortholat/lattice_model.hpp"
#include "ortholat/matrix.hpp"
#include "ortholat/random.hpp"
#include "ortholat/spectral.hpp"

// Instance generators shared by the verification suites and the tests.

namespace ortholat {

template <class T>
using Pair = std::pair<T, T>;

namespace detail {
inline ComplexMatrix in_frame(const ComplexMatrix& left, const ComplexMatrix& block, const ComplexMatrix& right) {
  return left * block * right.adjoint();
}
inline ComplexMatrix pad_first(const ComplexMatrix& block, std::size_t rest) {
  return block_diagonal(block, ComplexMatrix(rest));
}
inline ComplexMatrix pad_second(std::size_t lead, const ComplexMatrix& block) {
  return block_diagonal(ComplexMatrix(lead), block);
}
}  // namespace detail

/// a = U diag(A, 0) U*, b = U diag(0, B) U* with Hermitian blocks, so
/// |a||b| = 0. For n = 1 the second element is zero.
inline Pair<HermitianMatrix> orthogonal_hermitian_pair(std::size_t n, Rng& rng, bool positive = false) {
  auto block = [&](std::size_t k) { return positive ? random_psd(k, rng) : random_hermitian(k, rng); };
  if (n < 2) return {block(n), HermitianMatrix(n)};
  const std::size_t k = rng.index(1, n - 1);
  const ComplexMatrix u = random_unitary(n, rng);
  const HermitianMatrix a(detail::in_frame(u, detail::pad_first(block(k).matrix(), n - k), u));
  const HermitianMatrix b(detail::in_frame(u, detail::pad_second(k, block(n - k).matrix()), u));
  return {a, b};
}

/// Kinds of general (non-self-adjoint) pairs by which products vanish.
enum class GeneralPairKind {
  kOrthogonal,  ///< a b* = 0 and a* b = 0
  kLeftOnly,    ///< a* b = 0, a b* != 0
  kRightOnly,   ///< a b* = 0, a* b != 0
  kGeneric,     ///< neither product vanishes
};

/// a = U diag(A, 0) V*, b = U' diag(0, B) V'* with Ginibre blocks. Sharing
/// the left frame kills a* b, sharing the right frame kills a b*.
inline Pair<ComplexMatrix> general_pair(std::size_t n, GeneralPairKind kind, Rng& rng) {
  if (kind == GeneralPairKind::kGeneric || n < 2) return {random_ginibre(n, rng), random_ginibre(n, rng)};
  const std::size_t k = rng.index(1, n - 1);
  const ComplexMatrix u1 = random_unitary(n, rng);
  const ComplexMatrix v1 = random_unitary(n, rng);
  const bool share_left = kind != GeneralPairKind::kRightOnly;
  const bool share_right = kind != GeneralPairKind::kLeftOnly;
  const ComplexMatrix u2 = share_left ? u1 : random_unitary(n, rng);
  const ComplexMatrix v2 = share_right ? v1 : random_unitary(n, rng);
  return {detail::in_frame(u1, detail::pad_first(random_ginibre(k, rng), n - k), v1),
          detail::in_frame(u2, detail::pad_second(k, random_ginibre(n - k, rng)), v2)};
}

/// Positive pair with ||ab|| > min_ratio ||a|| ||b|| (operator norms).
inline Pair<HermitianMatrix> non_orthogonal_psd_pair(std::size_t n, Rng& rng, double min_ratio = 0.1) {
  for (;;) {
    HermitianMatrix a = random_psd(n, rng);
    HermitianMatrix b = random_psd(n, rng);
    if (operator_norm(a * b) > min_ratio * operator_norm(a) * operator_norm(b)) return {a, b};
  }
}

/// Commuting pair U diag(x) U*, U diag(y) U* together with x and y.
struct CommutingPair {
  HermitianMatrix a;
  HermitianMatrix b;
  ComplexMatrix frame;
  std::vector<double> x;
  std::vector<double> y;
};

inline CommutingPair commuting_pair(std::size_t n, Rng& rng) {
  CommutingPair p;
  p.frame = random_unitary(n, rng);
  for (std::size_t i = 0; i < n; ++i) {
    p.x.push_back(rng.normal());
    p.y.push_back(rng.normal());
  }
  p.a = conjugate_diagonal(p.frame, p.x);
  p.b = conjugate_diagonal(p.frame, p.y);
  return p;
}

inline LatticeVector random_lattice_vector(std::size_t n, Rng& rng) {
  LatticeVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = rng.normal();
  return v;
}

/// Positive vectors; with `disjoint` each coordinate is nonzero in at most one.
inline Pair<LatticeVector> positive_lattice_pair(std::size_t n, Rng& rng, bool disjoint) {
  LatticeVector u(n);
  LatticeVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = rng.uniform(0.05, 2.0);
    const double b = rng.uniform(0.05, 2.0);
    if (!disjoint) {
      u[i] = a;
      v[i] = b;
    } else if (rng.coin()) {
      u[i] = a;
    } else {
      v[i] = b;
    }
  }
  return {u, v};
}

}  // namespace ortholat

#endif  // ORTHOLAT_GENERATORS_HPP_
