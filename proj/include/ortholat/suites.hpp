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
#ifndef ORTHOLAT_SUITES_HPP_
#define ORTHOLAT_SUITES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ortholat/axioms.hpp"
#include "ortholat/generators.hpp"
#include "ortholat/json_io.hpp"
#include "ortholat/lattice_model.hpp"
#include "ortholat/ortholattice.hpp"
#include "ortholat/orthogonality.hpp"

namespace ortholat {

/// Parameters shared by every verification suite. Matrix instances draw
/// their dimension uniformly from [min(2, dim), dim]; lattice instances
/// from [1, lattice_dim].
struct SuiteConfig {
  std::size_t dim = 4;
  std::size_t lattice_dim = 16;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::size_t inner_samples = 16;  ///< interval samples / perturbations per instance
  Tolerances tol;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::size_t trials = 0;
  OrthReport report;
  std::string error;  ///< set when the suite aborted with an exception
};

namespace suites {

inline std::size_t matrix_dim(const SuiteConfig& c, Rng& rng) { return rng.index(std::min<std::size_t>(2, c.dim), c.dim); }
inline std::size_t lattice_dim(const SuiteConfig& c, Rng& rng) { return rng.index(1, c.lattice_dim); }

/// Hereditary orthogonality on positive pairs built on complementary blocks.
inline OrthReport lemma1(const SuiteConfig& c) {
  OrthReport r("lemma1", c.tol.tol_zero);
  for (std::size_t i = 0; i < c.trials; ++i) {
    Rng rng(derive_seed(c.seed, i));
    const auto [a, b] = orthogonal_hermitian_pair(matrix_dim(c, rng), rng, true);
    r.merge(hereditary_check(a, b, c.inner_samples, rng.bits(), c.tol));
  }
  return r;
}

/// Three-way agreement on alternating constructed-orthogonal and generic pairs.
inline OrthReport prop2(const SuiteConfig& c) {
  OrthReport r("prop2", c.tol.tol_eq);
  r.add_flag("expected_verdict", true);
  for (std::size_t i = 0; i < c.trials; ++i) {
    Rng rng(derive_seed(c.seed, i));
    const std::size_t n = matrix_dim(c, rng);
    const bool constructed = i % 2 == 0;
    const auto [a, b] = constructed ? orthogonal_hermitian_pair(n, rng)
                                    : Pair<HermitianMatrix>{random_hermitian(n, rng), random_hermitian(n, rng)};
    const OrthReport p = check_prop2_equivalence(a, b, c.tol);
    r.add_flag("expected_verdict", p.holds == constructed);
    if (constructed) r.merge(p, "orthogonal_");
  }
  return r;
}

/// a* b = 0 iff |a*||b*| = 0, and the dilation route, on all four kinds of
/// general pairs.
inline OrthReport prop3(const SuiteConfig& c) {
  OrthReport r("prop3", c.tol.tol_zero);
  r.add_flag("expected_verdict", true);
  for (std::size_t i = 0; i < c.trials; ++i) {
    Rng rng(derive_seed(c.seed, i));
    const std::size_t n = matrix_dim(c, rng);
    auto kind = static_cast<GeneralPairKind>(i % 4);
    if (n < 2) kind = GeneralPairKind::kGeneric;
    const auto [a, b] = general_pair(n, kind, rng);
    const OrthReport p = alg_orth_general(a, b, c.tol);
    const bool right = p.residual("ab*") <= c.tol.tol_zero;
    const bool left = p.residual("a*b") <= c.tol.tol_zero;
    bool ok = false;
    switch (kind) {
      case GeneralPairKind::kOrthogonal:
        ok = left && right && p.holds;
        r.merge(p, "orthogonal_");
        break;
      case GeneralPairKind::kLeftOnly:
        ok = left && !right && !p.holds;
        break;
      case GeneralPairKind::kRightOnly:
        ok = right && !left && !p.holds;
        break;
      case GeneralPairKind::kGeneric:
        ok = !left && !right && !p.holds;
        break;
    }
    r.add_flag("expected_verdict", ok);
  }
  return r;
}

/// The ortho-infimum/supremum properties and uniqueness falsification.
/// Every tenth pair is equal and every tenth (offset one) comparable.
inline OrthReport theorem4(const SuiteConfig& c) {
  OrthReport r("theorem4", c.tol.tol_eq);
  for (std::size_t i = 0; i < c.trials; ++i) {
    Rng rng(derive_seed(c.seed, i));
    const std::size_t n = matrix_dim(c, rng);
    const HermitianMatrix a = random_hermitian(n, rng);
    HermitianMatrix b = random_hermitian(n, rng);
    if (i % 10 == 0) b = a;
    if (i % 10 == 1) b = a + random_psd(n, rng);
    r.merge(verify_theorem4(a, b, c.tol));
    r.merge(uniqueness_falsify(a, b, c.inner_samples, rng.bits(), c.tol));
  }
  return r;
}

inline OrthReport corollary5(const SuiteConfig& c) {
  OrthReport r("corollary5", c.tol.tol_eq);
  for (std::size_t i = 0; i < c.trials; ++i) {
    Rng rng(derive_seed(c.seed, i));
    const std::size_t n = lattice_dim(c, rng);
    const LatticeVector x = random_lattice_vector(n, rng);
    const LatticeVector y = i % 10 == 0 ? x : random_lattice_vector(n, rng);
    r.merge(verify_corollary5(x, y, c.inner_samples, rng.bits(), c.tol));
  }
  return r;
}

/// Disjointness against sampled infinity-orthogonality on alternating
/// disjoint and overlapping positive pairs, plus the AM-space norm laws.
inline OrthReport prop6(const SuiteConfig& c) {
  OrthReport r("prop6", c.tol.tol_eq);
  for (std::size_t i = 0; i < c.trials; ++i) {
    Rng rng(derive_seed(c.seed, i));
    const auto [u, v] = positive_lattice_pair(lattice_dim(c, rng), rng, i % 2 == 0);
    r.merge(prop6_check(u, v, c.inner_samples, rng.bits(), c.tol));
    r.merge(am_norm_laws(u, v, c.tol));
  }
  return r;
}

inline OrthReport theorem7(const SuiteConfig& c) {
  OrthReport r("theorem7", c.tol.tol_eq);
  r.merge(check_theorem7(MatrixSaModel(c.dim, c.tol), c.trials, derive_seed(c.seed, 1)), "matrix-sa:");
  r.merge(check_theorem7(CoordinateModel(c.lattice_dim, c.tol), c.trials, derive_seed(c.seed, 2)), "coordinate:");
  return r;
}

/// All five axioms on both carriers, and the always-orthogonal model as a
/// negative control that must fail uniqueness of the decomposition.
inline OrthReport axioms(const SuiteConfig& c) {
  OrthReport r("axioms", c.tol.tol_eq);
  const MatrixSaModel mat(c.dim, c.tol);
  const CoordinateModel coord(c.lattice_dim, c.tol);
  r.merge(check_axioms(mat, c.trials, derive_seed(c.seed, 1)), "matrix-sa:");
  r.merge(check_axioms(coord, c.trials, derive_seed(c.seed, 2)), "coordinate:");
  const OrthReport broken = check_axioms(BrokenOrthModel<MatrixSaModel>(mat), c.trials, derive_seed(c.seed, 3));
  r.add_flag("negative_control_fails_uniqueness", !broken.holds && broken.residual("axiom4_uniqueness") > 0.0);
  return r;
}

/// Diagonal matrices against their diagonal vectors: ortho-inf/sup versus
/// meet/join, and alg_orth_sa versus disjointness.
inline OrthReport bridge(const SuiteConfig& c) {
  constexpr double kBridgeTol = 1e-12;
  OrthReport r("bridge", kBridgeTol);
  r.add_flag("orth_verdicts_agree", true);
  for (std::size_t i = 0; i < c.trials; ++i) {
    Rng rng(derive_seed(c.seed, i));
    const std::size_t n = rng.index(1, c.dim);
    LatticeVector x = random_lattice_vector(n, rng);
    LatticeVector y = random_lattice_vector(n, rng);
    if (i % 2 == 0) {
      for (std::size_t k = 0; k < n; ++k) (rng.coin() ? x : y)[k] = 0.0;
    }
    const HermitianMatrix a = HermitianMatrix::diagonal(x.coords());
    const HermitianMatrix b = HermitianMatrix::diagonal(y.coords());
    const HermitianMatrix mn = HermitianMatrix::diagonal(meet(x, y).coords());
    const HermitianMatrix mx = HermitianMatrix::diagonal(join(x, y).coords());
    r.add("inf=meet", max_abs_difference(ortho_inf(a, b, c.tol), mn), kBridgeTol);
    r.add("sup=join", max_abs_difference(ortho_sup(a, b, c.tol), mx), kBridgeTol);
    r.add_flag("orth_verdicts_agree", lattice_orth(x, y, c.tol) == alg_orth_sa(a, b, c.tol).holds);
  }
  return r;
}

}  // namespace suites

/// Suite names in execution order for "all".
inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma1",     "prop2", "prop3",    "theorem4", "corollary5",
                                              "prop6",      "theorem7", "axioms", "bridge"};
  return names;
}

inline bool is_suite_name(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

/// Runs one named suite. Library errors are caught and reported as a
/// failed suite. Throws InvalidInput for an unknown name.
inline SuiteResult run_suite(const std::string& name, const SuiteConfig& c) {
  static const std::map<std::string, std::function<OrthReport(const SuiteConfig&)>> table{
      {"lemma1", suites::lemma1},         {"prop2", suites::prop2},   {"prop3", suites::prop3},
      {"theorem4", suites::theorem4},     {"corollary5", suites::corollary5}, {"prop6", suites::prop6},
      {"theorem7", suites::theorem7},     {"axioms", suites::axioms}, {"bridge", suites::bridge}};
  const auto it = table.find(name);
  if (it == table.end()) throw InvalidInput("unknown suite \"" + name + "\"");
  SuiteResult res;
  res.name = name;
  res.trials = c.trials;
  try {
    res.report = it->second(c);
    res.passed = res.report.holds;
  } catch (const Error& e) {
    res.error = e.what();
    res.report = OrthReport(name, c.tol.tol_eq);
    res.report.add_flag("aborted", false);
    res.passed = false;
  }
  return res;
}

inline Json suite_result_to_json(const SuiteResult& s) {
  Json j{{"name", s.name},
         {"passed", s.passed},
         {"trials", s.trials},
         {"max_violation", s.report.max_violation},
         {"report", report_to_json(s.report)}};
  if (!s.error.empty()) j["error"] = s.error;
  return j;
}

}  // namespace ortholat

#endif  // ORTHOLAT_SUITES_HPP_
