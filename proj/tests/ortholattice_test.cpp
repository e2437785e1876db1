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

#include "oracles.hpp"
#include "ortholat/generators.hpp"
#include "ortholat/ortholattice.hpp"
#include "test_util.hpp"

namespace ortholat {
namespace {

const HermitianMatrix kS = HermitianMatrix::diagonal({1.0, 0.0});
const HermitianMatrix kT{{0.5, 0.5}, {0.5, 0.5}};

HermitianMatrix from_herm2(const oracle::Herm2& h) {
  return HermitianMatrix(ComplexMatrix{{h.x, Complex(h.y, h.z)}, {Complex(h.y, -h.z), h.w}});
}

TEST(OrthoInf, ClosedFormOnNonComparablePair) {
  // |S - T| by direct squaring: (S - T)^2 = I/2.
  const HermitianMatrix d = kS - kT;
  EXPECT_TRUE(testing::MatrixNear(d * d, 0.5 * ComplexMatrix::identity(2), 1e-15));

  const HermitianMatrix expected = from_herm2(oracle::closed_form_inf());
  const HermitianMatrix c = ortho_inf(kS, kT);
  EXPECT_TRUE(testing::MatrixNear(c, expected, 1e-12));
  EXPECT_NEAR(c(0, 0).real(), (3.0 - std::sqrt(2.0)) / 4.0, 1e-12);
  EXPECT_NEAR(c(1, 1).real(), (1.0 - std::sqrt(2.0)) / 4.0, 1e-12);
  EXPECT_NEAR(c(0, 1).real(), 0.25, 1e-12);
  EXPECT_TRUE(verify_theorem4(kS, kT).holds);
}

TEST(OrthoInf, Examples) {
  const auto a = HermitianMatrix::diagonal({3.0, -1.0, 2.0});
  const auto b = HermitianMatrix::diagonal({1.0, 0.0, 2.0});
  EXPECT_TRUE(testing::MatrixNear(ortho_inf(a, b), HermitianMatrix::diagonal({1.0, -1.0, 2.0}), 1e-12));
  EXPECT_TRUE(testing::MatrixNear(ortho_sup(a, b), HermitianMatrix::diagonal({3.0, 0.0, 2.0}), 1e-12));
  EXPECT_TRUE(testing::MatrixNear(ortho_inf(a, a), a, 1e-12));
  const auto x = HermitianMatrix::diagonal({3.0, 1.0});
  const auto y = HermitianMatrix::diagonal({1.0, 2.0});
  EXPECT_TRUE(testing::MatrixNear(ortho_inf(x, y), HermitianMatrix::diagonal({1.0, 1.0}), 1e-12));
  EXPECT_TRUE(testing::MatrixNear(ortho_sup(x, y), HermitianMatrix::diagonal({3.0, 2.0}), 1e-12));
  EXPECT_THROW(ortho_inf(a, HermitianMatrix(2)), DimensionMismatch);
}

TEST(OrthoInf, ComparablePairGivesSmaller) {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = rng.index(1, 6);
    const HermitianMatrix a = random_hermitian(n, rng);
    const HermitianMatrix b = a + random_psd(n, rng);
    EXPECT_TRUE(testing::MatrixNear(ortho_inf(a, b), a, 1e-9));
    EXPECT_TRUE(testing::MatrixNear(ortho_sup(a, b), b, 1e-9));
  }
}

TEST(OrthoInf, CommutingPairsUseEntrywiseMinAndMax) {
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = rng.index(1, 6);
    CommutingPair p = commuting_pair(n, rng);
    std::vector<double> lo(n), hi(n);
    for (std::size_t k = 0; k < n; ++k) {
      lo[k] = std::min(p.x[k], p.y[k]);
      hi[k] = std::max(p.x[k], p.y[k]);
    }
    EXPECT_TRUE(testing::MatrixNear(ortho_inf(p.a, p.b), conjugate_diagonal(p.frame, lo), 1e-9));
    EXPECT_TRUE(testing::MatrixNear(ortho_sup(p.a, p.b), conjugate_diagonal(p.frame, hi), 1e-9));
  }
}

TEST(OrthoInf, AlgebraicProperties) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = rng.index(1, 7);
    const HermitianMatrix a = random_hermitian(n, rng);
    const HermitianMatrix b = random_hermitian(n, rng);
    const HermitianMatrix h = random_hermitian(n, rng);
    const double s = std::pow(10.0, rng.uniform(-2.0, 2.0));
    const HermitianMatrix c = ortho_inf(a, b);
    const HermitianMatrix d = ortho_sup(a, b);
    const double scale = 1e-10 * std::max(1.0, a.frobenius_norm() + b.frobenius_norm());

    EXPECT_TRUE(testing::MatrixNear(c, ortho_inf(b, a), scale));
    EXPECT_TRUE(testing::MatrixNear(c + d, a + b, scale));
    EXPECT_TRUE(testing::MatrixNear(d, -1.0 * ortho_inf(-1.0 * a, -1.0 * b), scale));
    EXPECT_TRUE(testing::MatrixNear(ortho_inf(a + h, b + h), c + h, scale + 1e-10 * h.frobenius_norm()));
    EXPECT_TRUE(testing::MatrixNear(ortho_inf(s * a, s * b), s * c, s * scale));
    EXPECT_TRUE(testing::MatrixNear(d - c, abs(a - b), scale));
  }
}

TEST(OrthoInfSupProperties, HoldsOnRandomPairs) {
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = rng.index(1, 8);
    const HermitianMatrix a = std::pow(10.0, rng.uniform(-3.0, 3.0)) * random_hermitian(n, rng);
    const HermitianMatrix b = random_hermitian(n, rng);
    const OrthReport r = verify_theorem4(a, b);
    EXPECT_TRUE(r.holds) << r.max_violation;
    EXPECT_EQ(r.details.size(), 10u);
  }
}

TEST(Uniqueness, HandPickedPerturbationsFail) {
  const HermitianMatrix c = ortho_inf(kS, kT);
  EXPECT_TRUE(is_orthogonal_lower_bound(kS, kT, c));
  // Moving up breaks c <= S or c <= T.
  const HermitianMatrix up = c + HermitianMatrix::diagonal({0.1, 0.0});
  EXPECT_GT(psd_violation(kS - up), 1e-3);
  EXPECT_FALSE(is_orthogonal_lower_bound(kS, kT, up));
  // Moving down keeps both bounds but breaks orthogonality.
  const HermitianMatrix down = c - HermitianMatrix::diagonal({1e-3, 0.0});
  EXPECT_TRUE(is_psd(kS - down));
  EXPECT_TRUE(is_psd(kT - down));
  EXPECT_GT(zero_product_residual(kS - down, kT - down), 1e-5);
  EXPECT_FALSE(is_orthogonal_lower_bound(kS, kT, down));
}

TEST(Uniqueness, RandomPerturbationsNeverSurvive) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = rng.index(1, 6);
    const HermitianMatrix a = random_hermitian(n, rng);
    const HermitianMatrix b = i % 10 == 0 ? a : random_hermitian(n, rng);
    const OrthReport r = uniqueness_falsify(a, b, 50, rng.bits());
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.residual("surviving_perturbations"), 0.0);
  }
}

TEST(Witness, FindsLowerBoundNotBelowOrthoInf) {
  const WitnessResult w = kadison_witness_search(kS, kT, WitnessOptions{});
  ASSERT_TRUE(w.found);
  EXPECT_GE(w.margin, 1e-3);
  EXPECT_TRUE(loewner_le(w.m, kS));
  EXPECT_TRUE(loewner_le(w.m, kT));
  EXPECT_FALSE(loewner_le(w.m, ortho_inf(kS, kT)));
  EXPECT_NEAR(-hermitian_eigendecompose(ortho_inf(kS, kT) - w.m).min(), w.margin, 1e-12);
}

TEST(Witness, GridOracleAgrees) {
  const oracle::GridWitness g = oracle::grid_witness({1.0, 0.0, 0.0, 0.0}, {0.5, 0.5, 0.0, 0.5}, oracle::closed_form_inf());
  EXPECT_GT(g.margin, 0.3);
  const HermitianMatrix m = from_herm2(g.m);
  EXPECT_TRUE(loewner_le(m, kS));
  EXPECT_TRUE(loewner_le(m, kT));
  EXPECT_FALSE(loewner_le(m, ortho_inf(kS, kT)));
  // The grid points are feasible, so the search should reach their margin.
  const WitnessResult w = kadison_witness_search(kS, kT, WitnessOptions{});
  EXPECT_GE(w.margin, g.margin - 0.01);
}

TEST(Witness, HigherDimensionalEmbedding) {
  const HermitianMatrix s = block_diagonal(kS, HermitianMatrix::identity(2));
  const HermitianMatrix t = block_diagonal(kT, HermitianMatrix::identity(2));
  const WitnessResult w = kadison_witness_search(s, t, WitnessOptions{.iters = 1500, .restarts = 4, .seed = 7});
  EXPECT_TRUE(w.found);
  EXPECT_TRUE(loewner_le(w.m, s));
  EXPECT_TRUE(loewner_le(w.m, t));
}

TEST(Witness, ErrorsAndDeterminism) {
  EXPECT_THROW(kadison_witness_search(kS, kS + HermitianMatrix::identity(2), WitnessOptions{}), ComparablePair);
  EXPECT_THROW(kadison_witness_search(kS, kT, WitnessOptions{.restarts = 0}), InvalidInput);
  EXPECT_THROW(kadison_witness_search(kS, kT, WitnessOptions{.iters = 0}), InvalidInput);
  EXPECT_THROW(kadison_witness_search(kS, HermitianMatrix(3), WitnessOptions{}), DimensionMismatch);

  const WitnessOptions opt{.iters = 300, .restarts = 3, .seed = 11};
  const WitnessResult w1 = kadison_witness_search(kS, kT, opt);
  const WitnessResult w2 = kadison_witness_search(kS, kT, opt);
  EXPECT_EQ(w1.m, w2.m);
  EXPECT_EQ(w1.margin, w2.margin);
  EXPECT_EQ(w1.restart, w2.restart);
}

}  // namespace
}  // namespace ortholat
