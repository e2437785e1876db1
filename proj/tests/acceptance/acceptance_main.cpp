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
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Counts and tolerances are fixed; nothing here reads
// the environment.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "ortholat/generators.hpp"
#include "ortholat/ortholat.hpp"
#include "ortholat/suites.hpp"

namespace {

using namespace ortholat;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

const HermitianMatrix kS = HermitianMatrix::diagonal({1.0, 0.0});
const HermitianMatrix kT{{0.5, 0.5}, {0.5, 0.5}};

// 1. Jordan decomposition on 1000 Hermitian matrices, n in [2, 8]. A third
// are rescaled by 10^[-3, 3] and a third have exact zero eigenvalues. |a| is
// checked against the library and against the square-root identity
// (a+ + a-)^2 = a^2 with a+ + a- positive.
Outcome functional_calculus() {
  Rng rng(derive_seed(1001, 0));
  double prod = 0.0, diff = 0.0, sum = 0.0, square = 0.0, cone = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = rng.index(2, 8);
    HermitianMatrix a = random_hermitian(n, rng);
    if (i % 3 == 1) a = std::pow(10.0, rng.uniform(-3.0, 3.0)) * a;
    if (i % 3 == 2) {
      std::vector<double> d(n);
      for (double& x : d) x = rng.coin() ? 0.0 : rng.normal();
      a = conjugate_diagonal(random_unitary(n, rng), d);
    }
    const JordanParts j = jordan_decompose(a);
    const double fa = a.frobenius_norm();
    prod = std::max(prod, (j.pos * j.neg).frobenius_norm() / std::max(1.0, fa * fa));
    diff = std::max(diff, relative_distance(j.pos - j.neg, a));
    sum = std::max(sum, relative_distance(j.pos + j.neg, abs(a)));
    const HermitianMatrix s = j.pos + j.neg;
    square = std::max(square, relative_distance(s * s, a * a));
    cone = std::max(cone, psd_violation(s));
  }
  const bool pass = prod <= 1e-9 && diff <= 1e-9 && sum <= 1e-9 && square <= 1e-9 && cone <= 1e-9;
  return {pass, fmt("1000 matrices; ||a+a-|| %.2e, a+-a- %.2e, a++a-=|a| %.2e, (a++a-)^2=a^2 %.2e (limit 1e-9)", prod,
                    diff, sum, square)};
}

// 2. Three characterizations of orthogonality agree on 1000 pairs, half
// built on complementary blocks of a common frame, half generic. The
// library throws when its three verdicts differ; the direct product ab is
// the reference verdict.
Outcome three_way_agreement() {
  Rng rng(derive_seed(1002, 0));
  int disagreements = 0, orthogonal = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = rng.index(2, 8);
    const bool constructed = i % 2 == 0;
    const auto [a, b] = constructed ? orthogonal_hermitian_pair(n, rng)
                                    : Pair<HermitianMatrix>{random_hermitian(n, rng), random_hermitian(n, rng)};
    const bool direct = (a * b).frobenius_norm() <= 1e-9 * std::max(1.0, a.frobenius_norm() * b.frobenius_norm());
    try {
      const bool verdict = check_prop2_equivalence(a, b).holds;
      if (verdict != direct || verdict != constructed) ++disagreements;
      if (verdict) ++orthogonal;
    } catch (const InternalInconsistency&) {
      ++disagreements;
    }
  }
  return {disagreements == 0, fmt("1000 pairs (%d orthogonal); %d disagreements", orthogonal, disagreements)};
}

// 3. a*b = 0, |a*||b*| = 0 and the dilation route agree on 1000 complex
// pairs of four kinds, plus the E12/E13 fixture.
Outcome general_agreement() {
  Rng rng(derive_seed(1003, 0));
  int disagreements = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = rng.index(2, 8);
    const auto kind = static_cast<GeneralPairKind>(i % 4);
    const auto [a, b] = general_pair(n, kind, rng);
    try {
      const OrthReport r = alg_orth_general(a, b);
      const bool left = r.residual("a*b") <= 1e-9;
      const bool right = r.residual("ab*") <= 1e-9;
      const bool expect_left = kind == GeneralPairKind::kOrthogonal || kind == GeneralPairKind::kLeftOnly;
      const bool expect_right = kind == GeneralPairKind::kOrthogonal || kind == GeneralPairKind::kRightOnly;
      if (left != expect_left || right != expect_right || r.holds != (left && right)) ++disagreements;
    } catch (const InternalInconsistency&) {
      ++disagreements;
    }
  }
  const ComplexMatrix e12 = ComplexMatrix::unit(3, 1, 2);
  const ComplexMatrix e13 = ComplexMatrix::unit(3, 1, 3);
  const bool fixture = e12 * e13.adjoint() == ComplexMatrix(3) && e12.adjoint() * e13 == ComplexMatrix::unit(3, 2, 3);
  return {disagreements == 0 && fixture,
          fmt("1000 pairs; %d disagreements; E12/E13 fixture %s", disagreements, fixture ? "exact" : "WRONG")};
}

// 4. Ortho-infimum/supremum properties and uniqueness on 1000 pairs; one in
// ten equal, one in ten comparable.
Outcome ortho_inf_sup_suite() {
  Rng rng(derive_seed(1004, 0));
  int failures = 0;
  double worst = 0.0, survivors = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = rng.index(2, 8);
    const HermitianMatrix a = random_hermitian(n, rng);
    HermitianMatrix b = random_hermitian(n, rng);
    if (i % 10 == 0) b = a;
    if (i % 10 == 1) b = a + random_psd(n, rng);
    const OrthReport t = verify_theorem4(a, b);
    const OrthReport u = uniqueness_falsify(a, b, 32, rng.bits());
    if (!t.holds || !u.holds) ++failures;
    worst = std::max(worst, t.max_violation);
    survivors += u.residual("surviving_perturbations");
  }
  return {failures == 0 && survivors == 0.0,
          fmt("1000 pairs x 32 perturbations; %d failures, worst scaled residual %.2e, %g survivors", failures, worst,
              survivors)};
}

// 5. Closed form for S = diag(1, 0), T = [[1,1],[1,1]]/2.
Outcome closed_form() {
  const HermitianMatrix c = ortho_inf(kS, kT);
  const oracle::Herm2 e = oracle::closed_form_inf();
  const ComplexMatrix expected{{e.x, Complex(e.y, e.z)}, {Complex(e.y, -e.z), e.w}};
  const double err = max_abs_difference(c, expected);
  return {err <= 1e-9, fmt("max entry error %.2e (limit 1e-9)", err)};
}

// 6. Witness search with the default budget, checked by 2x2 closed-form
// eigenvalues, and the exhaustive grid oracle.
Outcome lower_bound_witness() {
  const WitnessOptions opt;
  const WitnessResult w = kadison_witness_search(kS, kT, opt);
  const oracle::Herm2 m{w.m(0, 0).real(), w.m(0, 1).real(), w.m(0, 1).imag(), w.m(1, 1).real()};
  const oracle::Herm2 s{1.0, 0.0, 0.0, 0.0};
  const oracle::Herm2 t{0.5, 0.5, 0.0, 0.5};
  const oracle::Herm2 c = oracle::closed_form_inf();
  const double below_s = oracle::min_eig(oracle::minus(s, m));
  const double below_t = oracle::min_eig(oracle::minus(t, m));
  const double margin = -oracle::min_eig(oracle::minus(c, m));
  const bool checked = w.found && w.margin >= 1e-3 && below_s >= -1e-9 && below_t >= -1e-9 && margin >= 1e-3;
  const oracle::GridWitness g = oracle::grid_witness(s, t, c);
  const bool grid = g.margin >= 1e-3;
  return {checked && grid,
          fmt("%zu restarts x %zu iters: margin %.4f (oracle %.4f, lambda_min(S-m) %.1e, lambda_min(T-m) %.1e); "
              "grid oracle margin %.4f",
              opt.restarts, opt.iters, w.margin, margin, below_s, below_t, g.margin)};
}

// 7. Sampled absolute infinity-orthogonality against a b = 0.
Outcome abs_infty_consistency() {
  Rng rng(derive_seed(1007, 0));
  int false_violations = 0;
  for (int i = 0; i < 100; ++i) {
    const auto [a, b] = orthogonal_hermitian_pair(rng.index(2, 8), rng, true);
    if (!abs_infty_orth_sampled(a, b, {200, rng.bits(), false}).holds) ++false_violations;
  }
  int detected = 0;
  bool strong = true;
  for (int i = 0; i < 100; ++i) {
    const auto [a, b] = non_orthogonal_psd_pair(rng.index(2, 8), rng, 0.1);
    strong = strong && operator_norm(a * b) > 0.1 * operator_norm(a) * operator_norm(b);
    if (!abs_infty_orth_sampled(a, b, {500, rng.bits(), true}).holds) ++detected;
  }
  return {false_violations == 0 && detected >= 95 && strong,
          fmt("orthogonal: %d/100 pairs with a violation over 200 samples (need 0); "
              "non-orthogonal: %d/100 detected within 500 samples (need >= 95)",
              false_violations, detected)};
}

// 8. Lattice suites on 500 instances with n <= 16, and diagonal matrices
// against coordinatewise min/max.
Outcome lattice_model() {
  SuiteConfig cfg;
  cfg.dim = 16;
  cfg.lattice_dim = 16;
  cfg.trials = 500;
  cfg.seed = derive_seed(1008, 0);
  const SuiteResult cor = run_suite("corollary5", cfg);
  const SuiteResult p6 = run_suite("prop6", cfg);  // includes the AM-space norm laws
  const SuiteResult br = run_suite("bridge", cfg);

  Rng rng(derive_seed(1008, 1));
  double direct = 0.0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = rng.index(1, 16);
    std::vector<double> x(n), y(n);
    for (std::size_t k = 0; k < n; ++k) {
      x[k] = rng.normal();
      y[k] = rng.normal();
    }
    const HermitianMatrix c = ortho_inf(HermitianMatrix::diagonal(x), HermitianMatrix::diagonal(y));
    const HermitianMatrix d = ortho_sup(HermitianMatrix::diagonal(x), HermitianMatrix::diagonal(y));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) {
        const double lo = r == s ? std::min(x[r], y[r]) : 0.0;
        const double hi = r == s ? std::max(x[r], y[r]) : 0.0;
        direct = std::max({direct, std::abs(c(r, s) - lo), std::abs(d(r, s) - hi)});
      }
    }
  }
  const double bridge = std::max({br.report.residual("inf=meet"), br.report.residual("sup=join"), direct});
  return {cor.passed && p6.passed && br.passed && bridge <= 1e-12,
          fmt("500 instances each: corollary5 %s, AM-norm/prop6 %s, bridge %s; bridge deviation %.2e (limit 1e-12)",
              cor.passed ? "pass" : "FAIL", p6.passed ? "pass" : "FAIL", br.passed ? "pass" : "FAIL", bridge)};
}

// 9. Five axioms and the normed characterization at 500 trials on both
// carriers; the always-orthogonal relation must fail uniqueness.
Outcome axioms_and_characterization() {
  const MatrixSaModel mat(4);
  const CoordinateModel coord(16);
  const OrthReport am = check_axioms(mat, 500, 9001);
  const OrthReport ac = check_axioms(coord, 500, 9002);
  const OrthReport tm = check_theorem7(mat, 500, 9003);
  const OrthReport tc = check_theorem7(coord, 500, 9004);
  const OrthReport bm = check_axioms(BrokenOrthModel<MatrixSaModel>(mat), 500, 9005);
  const OrthReport bc = check_axioms(BrokenOrthModel<CoordinateModel>(coord), 500, 9006);
  const bool control = !bm.holds && bm.residual("axiom4_uniqueness") > 0.0 && !bc.holds &&
                       bc.residual("axiom4_uniqueness") > 0.0;
  return {am.holds && ac.holds && tm.holds && tc.holds && control,
          fmt("axioms %s/%s, characterization %s/%s (matrix-sa n=4 / coordinate n=16); "
              "always-orthogonal relation fails uniqueness: %s",
              am.holds ? "pass" : "FAIL", ac.holds ? "pass" : "FAIL", tm.holds ? "pass" : "FAIL",
              tc.holds ? "pass" : "FAIL", control ? "yes" : "NO")};
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(ORTHOLAT_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, out};
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

// 10. Byte-identical reports from two CLI runs.
Outcome determinism() {
  const auto [s1, o1] = run_cli("verify --suite all --seed 42");
  const auto [s2, o2] = run_cli("verify --suite all --seed 42");
  const bool same = !o1.empty() && o1 == o2;
  return {same && s1 == 0 && s2 == 0,
          fmt("%zu-byte reports %s; exit codes %d, %d", o1.size(), same ? "identical" : "DIFFER", s1, s2)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Jordan decomposition", functional_calculus},
      {"three-way orthogonality agreement", three_way_agreement},
      {"general-pair orthogonality agreement", general_agreement},
      {"ortho-inf/sup and uniqueness", ortho_inf_sup_suite},
      {"closed-form ortho-infimum", closed_form},
      {"lower-bound witness", lower_bound_witness},
      {"algebraic vs absolute infinity-orthogonality", abs_infty_consistency},
      {"lattice model", lattice_model},
      {"axioms and normed characterization", axioms_and_characterization},
      {"CLI determinism", determinism},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d  %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
