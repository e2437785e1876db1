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
#ifndef ORTHOLAT_ORTHOLATTICE_HPP_
#define ORTHOLAT_ORTHOLATTICE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "ortholat/error.hpp"
#include "ortholat/matrix.hpp"
#include "ortholat/orthogonality.hpp"
#include "ortholat/random.hpp"
#include "ortholat/report.hpp"
#include "ortholat/spectral.hpp"

namespace ortholat {

/// Ortho-infimum (a + b - |a - b|) / 2: the unique common lower bound c with
/// (a - c)(b - c) = 0.
inline HermitianMatrix ortho_inf(const HermitianMatrix& a, const HermitianMatrix& b,
                                 const Tolerances& tol = default_tolerances()) {
  require_same_dim(a.dim(), b.dim(), "ortho_inf");
  return 0.5 * (a + b - abs(a - b, tol));
}

/// Ortho-supremum (a + b + |a - b|) / 2.
inline HermitianMatrix ortho_sup(const HermitianMatrix& a, const HermitianMatrix& b,
                                 const Tolerances& tol = default_tolerances()) {
  require_same_dim(a.dim(), b.dim(), "ortho_sup");
  return 0.5 * (a + b + abs(a - b, tol));
}

/// Checks c = ortho_inf(a, b) and d = ortho_sup(a, b): c <= a, c <= b,
/// (a - c)(b - c) = 0, a <= d, b <= d, (d - a)(d - b) = 0, and that the
/// residuals are the Jordan parts of x = a - b: a - c = d - b = x+ and
/// b - c = d - a = x-. Never throws on failure; reports residuals.
inline OrthReport verify_theorem4(const HermitianMatrix& a, const HermitianMatrix& b,
                                  const Tolerances& tol = default_tolerances()) {
  require_same_dim(a.dim(), b.dim(), "verify_theorem4");
  const HermitianMatrix c = ortho_inf(a, b, tol);
  const HermitianMatrix d = ortho_sup(a, b, tol);
  const JordanParts x = jordan_decompose(a - b, tol);

  OrthReport r("theorem4", tol.tol_eq);
  r.add("c<=a", psd_violation(a - c, tol), tol.tol_psd);
  r.add("c<=b", psd_violation(b - c, tol), tol.tol_psd);
  r.add("(a-c)(b-c)=0", zero_product_residual(a - c, b - c), tol.tol_zero);
  r.add("a<=d", psd_violation(d - a, tol), tol.tol_psd);
  r.add("b<=d", psd_violation(d - b, tol), tol.tol_psd);
  r.add("(d-a)(d-b)=0", zero_product_residual(d - a, d - b), tol.tol_zero);
  r.add("a-c=(a-b)+", relative_distance(a - c, x.pos), tol.tol_eq);
  r.add("b-c=(a-b)-", relative_distance(b - c, x.neg), tol.tol_eq);
  r.add("d-b=(a-b)+", relative_distance(d - b, x.pos), tol.tol_eq);
  r.add("d-a=(a-b)-", relative_distance(d - a, x.neg), tol.tol_eq);
  return r;
}

/// True when c' is, within tolerance, a common lower bound of a and b whose
/// residuals a - c' and b - c' are orthogonal.
inline bool is_orthogonal_lower_bound(const HermitianMatrix& a, const HermitianMatrix& b,
                                      const HermitianMatrix& candidate, const Tolerances& tol = default_tolerances()) {
  const HermitianMatrix ra = a - candidate;
  const HermitianMatrix rb = b - candidate;
  return psd_violation(ra, tol) <= tol.tol_psd && psd_violation(rb, tol) <= tol.tol_psd &&
         zero_product_residual(ra, rb) <= tol.tol_zero;
}

/// Perturbation falsification of uniqueness of the ortho-infimum. Each
/// trial moves c = ortho_inf(a, b) by a random Hermitian delta and checks
/// that c + delta is no longer an orthogonal lower bound. Every other trial
/// uses a negative semidefinite delta, which keeps both bounds intact and
/// leaves only orthogonality to fail.
///
/// ||delta||_F is log-uniform in [1e-3 s, s] with s = ||a - b||_F (s = 1
/// when a = b). Much smaller moves change the residual product by O(||delta||^2),
/// which the zero-product tolerance cannot resolve.
inline OrthReport uniqueness_falsify(const HermitianMatrix& a, const HermitianMatrix& b, std::size_t trials,
                                     std::uint64_t seed, const Tolerances& tol = default_tolerances()) {
  require_same_dim(a.dim(), b.dim(), "uniqueness_falsify");
  const HermitianMatrix c = ortho_inf(a, b, tol);
  const double gap = (a - b).frobenius_norm();
  const double scale = gap > 0.0 ? gap : 1.0;
  const std::size_t n = a.dim();

  std::size_t survivors = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, i));
    HermitianMatrix dir = (i % 2 == 1) ? -1.0 * random_psd(n, rng) : random_hermitian(n, rng);
    const double norm = dir.frobenius_norm();
    if (norm == 0.0) continue;
    const double magnitude = scale * std::pow(10.0, -3.0 * rng.uniform());
    const HermitianMatrix delta = (magnitude / norm) * dir;
    if (is_orthogonal_lower_bound(a, b, c + delta, tol)) ++survivors;
  }
  OrthReport r("uniqueness", tol.tol_eq);
  r.add("surviving_perturbations", static_cast<double>(survivors), tol.tol_eq);
  return r;
}

struct WitnessOptions {
  std::size_t iters = 2000;
  std::size_t restarts = 16;
  std::uint64_t seed = 0;
  double margin_min = 1e-3;
};

/// Result of kadison_witness_search. `margin` is -lambda_min(c - m)
/// with c = ortho_inf(S, T); le_s and le_t are the normalized cone
/// violations of S - m and T - m.
struct WitnessResult {
  bool found = false;
  HermitianMatrix m;
  double margin = 0.0;
  double le_s = 0.0;
  double le_t = 0.0;
  std::size_t restart = 0;
};

/// Searches for a common lower bound m of non-comparable S, T that is not
/// below ortho_inf(S, T), which shows the ortho-infimum is not a greatest
/// lower bound. Every candidate m is first shifted down to
/// m' = m - phi(m) I with phi(m) = max(0, lambda_max(m - S), lambda_max(m - T)),
/// which makes it a common lower bound; randomized descent then minimizes
/// lambda_min(c - m') using coordinate and random-direction moves with an
/// adaptive step. Restarts use derived seeds;
/// the best margin wins, ties to the lowest restart index.
///
/// Throws ComparablePair when S <= T or T <= S. A result with found = false
/// reports the best margin reached; it is not a proof that none exists.
inline WitnessResult kadison_witness_search(const HermitianMatrix& s, const HermitianMatrix& t,
                                            const WitnessOptions& opt, const Tolerances& tol = default_tolerances()) {
  require_same_dim(s.dim(), t.dim(), "kadison_witness_search");
  if (opt.restarts < 1 || opt.iters < 1) throw InvalidInput("witness search needs restarts >= 1 and iters >= 1");
  if (is_comparable(s, t, tol)) {
    throw ComparablePair("kadison_witness_search: the pair is comparable, so min(S, T) is the infimum");
  }
  const std::size_t n = s.dim();
  const HermitianMatrix c = ortho_inf(s, t, tol);

  auto infeasibility = [&](const HermitianMatrix& m) {
    return std::max({0.0, hermitian_eigendecompose(m - s, tol).max(), hermitian_eigendecompose(m - t, tol).max()});
  };
  // lambda_min(c - m') for the feasible m' = m - infeasibility(m) I.
  auto objective = [&](const HermitianMatrix& m) {
    return hermitian_eigendecompose(c - m, tol).min() + infeasibility(m);
  };
  auto coordinate_direction = [&](Rng& rng) {
    ComplexMatrix e(n);
    const std::size_t i = rng.index(0, n - 1);
    const std::size_t j = rng.index(0, n - 1);
    if (i == j) {
      e(i, i) = 1.0;
    } else if (rng.coin()) {
      e(i, j) = 1.0;
      e(j, i) = 1.0;
    } else {
      e(i, j) = Complex(0.0, 1.0);
      e(j, i) = Complex(0.0, -1.0);
    }
    return HermitianMatrix(e);
  };

  WitnessResult best;
  bool have_best = false;
  for (std::size_t r = 0; r < opt.restarts; ++r) {
    Rng rng(derive_seed(opt.seed, r));
    HermitianMatrix m = c + 0.1 * random_hermitian(n, rng);
    m = m - infeasibility(m) * HermitianMatrix::identity(n);
    double f = objective(m);
    double step = 0.25;
    for (std::size_t it = 0; it < opt.iters; ++it) {
      HermitianMatrix dir = rng.coin() ? coordinate_direction(rng) : random_hermitian(n, rng);
      dir = (1.0 / std::max(dir.frobenius_norm(), 1e-300)) * dir;
      bool improved = false;
      for (const double sign : {1.0, -1.0}) {
        const HermitianMatrix cand = m + (sign * step) * dir;
        const double fc = objective(cand);
        if (fc < f) {
          m = cand;
          f = fc;
          improved = true;
          break;
        }
      }
      step = improved ? std::min(step * 1.5, 1.0) : std::max(step * 0.9, 1e-9);
    }
    m = m - infeasibility(m) * HermitianMatrix::identity(n);

    WitnessResult cur;
    cur.m = m;
    cur.margin = -hermitian_eigendecompose(c - m, tol).min();
    cur.le_s = psd_violation(s - m, tol);
    cur.le_t = psd_violation(t - m, tol);
    cur.restart = r;
    cur.found = cur.le_s <= tol.tol_psd && cur.le_t <= tol.tol_psd && cur.margin >= opt.margin_min;
    // Found beats not found, then larger margin; strict comparison keeps
    // the earliest restart on ties.
    const bool better = !have_best || (cur.found != best.found ? cur.found : cur.margin > best.margin);
    if (better) {
      best = cur;
      have_best = true;
    }
  }
  return best;
}

}  // namespace ortholat

#endif  // ORTHOLAT_ORTHOLATTICE_HPP_
