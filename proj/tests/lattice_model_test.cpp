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
#include <gtest/gtest.h>

#include <cmath>

#include "ortholat/generators.hpp"
#include "ortholat/lattice_model.hpp"
#include "ortholat/ortholattice.hpp"
#include "test_util.hpp"

namespace ortholat {
namespace {

TEST(LatticeVector, OpsExample) {
  const LatticeVector x{1.0, -2.0, 3.0};
  const LatticeVector y{0.0, 5.0, 3.0};
  const LatticeOps ops = lattice_ops(x, y);
  EXPECT_EQ(ops.meet, (LatticeVector{0.0, -2.0, 3.0}));
  EXPECT_EQ(ops.join, (LatticeVector{1.0, 5.0, 3.0}));
  EXPECT_EQ(lattice_abs(x), (LatticeVector{1.0, 2.0, 3.0}));
  EXPECT_EQ(x.sup_norm(), 3.0);
  EXPECT_THROW(meet(x, LatticeVector(2)), DimensionMismatch);
  EXPECT_THROW(LatticeVector({1.0, std::nan("")}), InvalidInput);
}

TEST(LatticeVector, OrderAndDisjointness) {
  EXPECT_TRUE(lattice_le(LatticeVector{0.0, 1.0}, LatticeVector{0.0, 2.0}));
  EXPECT_FALSE(lattice_le(LatticeVector{0.0, 1.0}, LatticeVector{-1e-3, 2.0}));
  EXPECT_TRUE(lattice_orth(LatticeVector{1.0, 0.0, -2.0}, LatticeVector{0.0, 4.0, 0.0}));
  EXPECT_FALSE(lattice_orth(LatticeVector{1.0, 0.0}, LatticeVector{1e-6, 4.0}));
  EXPECT_TRUE(is_positive(LatticeVector{0.0, 1.0}));
  EXPECT_FALSE(is_positive(LatticeVector{-1e-300, 1.0}));
}

TEST(LatticeVector, MeetAndJoinMatchHalfSumFormulas) {
  Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = rng.index(1, 16);
    const LatticeVector x = random_lattice_vector(n, rng);
    const LatticeVector y = random_lattice_vector(n, rng);
    const LatticeVector gap = lattice_abs(x - y);
    EXPECT_LE((0.5 * (x + y - gap) - meet(x, y)).sup_norm(), 1e-15);
    EXPECT_LE((0.5 * (x + y + gap) - join(x, y)).sup_norm(), 1e-15);
    EXPECT_EQ(meet(x, y), -join(-x, -y));
    EXPECT_EQ(meet(x, y) + join(x, y), x + y);
  }
}

TEST(LatticeInftyOrth, DisjointVectorsPassWholeGrid) {
  const LatticeVector u{2.0, 0.0, 0.0};
  const LatticeVector v{0.0, -1.0, 3.0};
  EXPECT_TRUE(lattice_infty_orth(u, v, KGrid::for_norms(2.0, 3.0)).holds);
  // Overlapping support fails at k = 1: ||u + u|| = 2||u||.
  EXPECT_FALSE(lattice_infty_orth(u, u, KGrid({1.0})).holds);
}

TEST(LatticeAbsInftyOrth, SampledBoxes) {
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto [u, v] = positive_lattice_pair(rng.index(1, 16), rng, true);
    EXPECT_TRUE(lattice_abs_infty_orth_sampled(u, v, {50, rng.bits(), false}).holds);
  }
  EXPECT_FALSE(lattice_abs_infty_orth_sampled(LatticeVector{1.0}, LatticeVector{1.0}, {50, 3, false}).holds);
  EXPECT_THROW(lattice_abs_infty_orth_sampled(LatticeVector{-1.0}, LatticeVector{1.0}, {1, 3, false}), NotPositive);
}

TEST(MeetJoinCharacterization, HoldsOnRandomPairs) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = rng.index(1, 16);
    const LatticeVector x = random_lattice_vector(n, rng);
    const LatticeVector y = i % 7 == 0 ? x : random_lattice_vector(n, rng);
    const OrthReport r = verify_corollary5(x, y, 32, rng.bits());
    EXPECT_TRUE(r.holds) << r.max_violation;
    EXPECT_EQ(r.residual("surviving_perturbations"), 0.0);
  }
}

TEST(MeetJoinCharacterization, AgreesWithDiagonalMatrices) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = rng.index(1, 8);
    const LatticeVector x = random_lattice_vector(n, rng);
    const LatticeVector y = random_lattice_vector(n, rng);
    const HermitianMatrix c = ortho_inf(HermitianMatrix::diagonal(x.coords()), HermitianMatrix::diagonal(y.coords()));
    const HermitianMatrix d = ortho_sup(HermitianMatrix::diagonal(x.coords()), HermitianMatrix::diagonal(y.coords()));
    EXPECT_LE(max_abs_difference(c, HermitianMatrix::diagonal(meet(x, y).coords())), 1e-12);
    EXPECT_LE(max_abs_difference(d, HermitianMatrix::diagonal(join(x, y).coords())), 1e-12);
  }
}

TEST(AmNorm, LawsOnPositivePairs) {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto [u, v] = positive_lattice_pair(rng.index(1, 16), rng, rng.coin());
    EXPECT_TRUE(am_norm_laws(u, v).holds);
  }
  EXPECT_THROW(am_norm_laws(LatticeVector{-1.0}, LatticeVector{1.0}), PreconditionFailed);
  EXPECT_THROW(am_join_law(LatticeVector{1.0}, LatticeVector{-1.0}), PreconditionFailed);
}

TEST(AmNorm, MonotoneLawOnSignedVectors) {
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = rng.index(1, 16);
    const LatticeVector v = random_lattice_vector(n, rng);
    LatticeVector u(n);
    for (std::size_t j = 0; j < n; ++j) u[j] = rng.uniform(-1.0, 1.0) * v[j];
    EXPECT_TRUE(am_monotone_law(u, v).holds);
  }
}

TEST(AmNorm, OrderUnitNormMatchesSupNorm) {
  const LatticeVector v{0.5, -3.0, 2.0};
  EXPECT_NEAR(order_unit_norm_bisect(v, LatticeVector::constant(3, 1.0)), 3.0, 1e-12);
  EXPECT_NEAR(order_unit_norm_bisect(v, LatticeVector{1.0, 2.0, 4.0}), 1.5, 1e-12);
  EXPECT_EQ(order_unit_norm_bisect(LatticeVector(3), LatticeVector::constant(3, 1.0)), 0.0);
  EXPECT_THROW(order_unit_norm_bisect(v, LatticeVector{1.0, 0.0, 1.0}), NotOrderUnit);
}

TEST(DisjointnessVsInftyOrth, DisjointnessDecidesAbsoluteInftyOrthogonality) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const bool disjoint = i % 2 == 0;
    const auto [u, v] = positive_lattice_pair(rng.index(1, 16), rng, disjoint);
    const OrthReport r = prop6_check(u, v, 20, rng.bits());
    EXPECT_TRUE(r.holds);
    if (!disjoint) {
      const LatticeVector w = meet(u, v);
      EXPECT_FALSE(lattice_infty_orth(w, w, KGrid({1.0})).holds);
    }
  }
  EXPECT_THROW(prop6_check(LatticeVector{-1.0}, LatticeVector{0.0}, 1, 0), PreconditionFailed);
}

}  // namespace
}  // namespace ortholat
