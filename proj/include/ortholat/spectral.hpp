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
#ifndef ORTHOLAT_SPECTRAL_HPP_
#define ORTHOLAT_SPECTRAL_HPP_

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "ortholat/error.hpp"
#include "ortholat/matrix.hpp"
#include "ortholat/tolerances.hpp"

namespace ortholat {

/// Eigenvalues in non-decreasing order and a unitary whose columns are the
/// matching eigenvectors, so that a = U diag(lambda) U*.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  std::size_t dim() const { return eigenvalues.size(); }
  double min() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
  double max() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
  /// max |lambda_i|, the operator norm of the decomposed matrix.
  double radius() const { return std::max(std::abs(min()), std::abs(max())); }
};

/// Cyclic complex Jacobi. Sweeps over all (p, q) pairs with 2x2 Hermitian
/// rotations until the off-diagonal Frobenius norm is at most
/// tol_eig * ||a||_F, then runs one polishing sweep. Throws NoConvergence
/// after max_sweeps sweeps.
inline Spectrum hermitian_eigendecompose(const HermitianMatrix& a,
                                         const Tolerances& tol = default_tolerances()) {
  const std::size_t n = a.dim();
  ComplexMatrix w = a.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = tol.tol_eig * a.frobenius_norm();

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += std::norm(w(i, j));
      }
    }
    return std::sqrt(s);
  };

  auto sweep = [&] {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex beta = w(p, q);
        const double mag = std::abs(beta);
        if (mag == 0.0) continue;
        const Complex phase = beta / mag;
        const double tau = (w(q, q).real() - w(p, p).real()) / (2.0 * mag);
        double t;
        if (std::abs(tau) > 1e150) {
          t = 0.5 / tau;
        } else {
          t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex se = s * phase;
        const Complex sec = s * std::conj(phase);

        // w <- G* w G with G = [[c, s e], [-s conj(e), c]] on (p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const Complex wkp = w(k, p);
          const Complex wkq = w(k, q);
          w(k, p) = c * wkp - sec * wkq;
          w(k, q) = se * wkp + c * wkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex wpk = w(p, k);
          const Complex wqk = w(q, k);
          w(p, k) = c * wpk - se * wqk;
          w(q, k) = sec * wpk + c * wqk;
        }
        w(p, q) = 0.0;
        w(q, p) = 0.0;
        w(p, p) = w(p, p).real();
        w(q, q) = w(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - sec * vkq;
          v(k, q) = se * vkp + c * vkq;
        }
      }
    }
  };

  bool converged = off_norm() <= threshold;
  for (int k = 0; k < tol.max_sweeps && !converged; ++k) {
    sweep();
    converged = off_norm() <= threshold;
  }
  if (!converged) {
    throw NoConvergence("Jacobi eigensolver: off-diagonal norm " + std::to_string(off_norm()) +
                        " above " + std::to_string(threshold) + " after " +
                        std::to_string(tol.max_sweeps) + " sweeps");
  }

  // Convergence is quadratic, so one more sweep takes the residue from
  // about tol_eig down to round-off. Without it, a^(1/2) of a rank-deficient
  // a turns a 1e-12 leak into a 1e-6 one.
  if (off_norm() > 0.0) sweep();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return w(i, i).real() < w(j, j).real(); });
  Spectrum spec{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    spec.eigenvalues[k] = w(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) spec.eigenvectors(i, k) = v(i, order[k]);
  }
  return spec;
}

/// f(a) = U diag(f(lambda)) U*.
template <class F>
HermitianMatrix apply_function(const Spectrum& spec, F&& f) {
  const std::size_t n = spec.dim();
  const ComplexMatrix& u = spec.eigenvectors;
  ComplexMatrix r(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(spec.eigenvalues[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex left = fk * u(i, k);
      for (std::size_t j = 0; j < n; ++j) r(i, j) += left * std::conj(u(j, k));
    }
  }
  return HermitianMatrix(r);
}

template <class F>
HermitianMatrix apply_function(const HermitianMatrix& a, F&& f,
                               const Tolerances& tol = default_tolerances()) {
  return apply_function(hermitian_eigendecompose(a, tol), std::forward<F>(f));
}

/// a = pos - neg with pos, neg >= 0 and pos * neg = 0; abs = pos + neg.
/// 64 n eps max(||a||, scale): eigenvalues this close to zero are
/// indistinguishable from round-off and are treated as zero. `scale` is the
/// norm of whatever a was computed from, when that is larger than a.
inline double roundoff_floor(const Spectrum& spec, double scale = 0.0) {
  return 64.0 * static_cast<double>(std::max<std::size_t>(spec.dim(), 1)) * DBL_EPSILON *
         std::max(spec.radius(), scale);
}

struct JordanParts {
  HermitianMatrix pos;
  HermitianMatrix neg;
  HermitianMatrix abs;
};

/// a+ and a- with eigenvalues below roundoff_floor dropped, so that a
/// definite a has an exactly zero opposite part.
inline JordanParts jordan_decompose(const HermitianMatrix& a, const Tolerances& tol = default_tolerances()) {
  const Spectrum spec = hermitian_eigendecompose(a, tol);
  const double floor = roundoff_floor(spec);
  JordanParts parts{apply_function(spec, [floor](double x) { return x > floor ? x : 0.0; }),
                    apply_function(spec, [floor](double x) { return x < -floor ? -x : 0.0; }),
                    apply_function(spec, [](double x) { return std::abs(x); })};
  return parts;
}

inline HermitianMatrix abs(const HermitianMatrix& a, const Tolerances& tol = default_tolerances()) {
  return apply_function(a, [](double x) { return std::abs(x); }, tol);
}

/// tol_psd * max(1, ||a||): the slack allowed below zero in the cone checks.
inline double psd_slack(const Spectrum& spec, const Tolerances& tol) {
  return tol.tol_psd * std::max(1.0, spec.radius());
}

/// Normalized cone violation max(0, -lambda_min) / max(1, ||a||); the
/// element is positive iff this is at most tol_psd.
inline double psd_violation(const HermitianMatrix& a, const Tolerances& tol = default_tolerances()) {
  const Spectrum spec = hermitian_eigendecompose(a, tol);
  return std::max(0.0, -spec.min()) / std::max(1.0, spec.radius());
}

/// Square root of a positive element. Eigenvalues within the slack below
/// zero, and positive eigenvalues under the round-off floor of the solver,
/// are taken as zero; otherwise a tiny kernel eigenvalue of size eps
/// would surface as sqrt(eps) in the result. See roundoff_floor for `scale`.
inline HermitianMatrix sqrt_psd(const HermitianMatrix& a, const Tolerances& tol = default_tolerances(),
                                double scale = 0.0) {
  const Spectrum spec = hermitian_eigendecompose(a, tol);
  if (spec.min() < -psd_slack(spec, tol)) {
    throw NotPositive("sqrt_psd: minimum eigenvalue " + std::to_string(spec.min()) + " is negative");
  }
  const double floor = roundoff_floor(spec, scale);
  return apply_function(spec, [floor](double x) { return x > floor ? std::sqrt(x) : 0.0; });
}

/// The self-adjoint dilation [0 x; x* 0] in M_2(M_n).
inline HermitianMatrix embed_offdiag(const ComplexMatrix& x) {
  const std::size_t n = x.dim();
  ComplexMatrix e(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      e(i, n + j) = x(i, j);
      e(n + j, i) = std::conj(x(i, j));
    }
  }
  return HermitianMatrix(e);
}

namespace detail {
inline HermitianMatrix sub_block(const HermitianMatrix& m, std::size_t offset, std::size_t n) {
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r(i, j) = m(offset + i, offset + j);
  }
  return HermitianMatrix(r);
}
}  // namespace detail

/// |x| = (x* x)^{1/2} and |x*| = (x x*)^{1/2} together.
struct PolarMagnitudes {
  HermitianMatrix abs;          ///< |x|
  HermitianMatrix abs_adjoint;  ///< |x*|
};

/// Reads both magnitudes off |[0 x; x* 0]| = diag(|x*|, |x|). The eigenvalues
/// of the dilation are +-sigma_i with absolute error O(eps ||x||), which
/// avoids the sqrt(eps) loss of forming x* x and taking its square root.
inline PolarMagnitudes polar_magnitudes(const ComplexMatrix& x, const Tolerances& tol = default_tolerances()) {
  const std::size_t n = x.dim();
  const HermitianMatrix dil_abs = abs(embed_offdiag(x), tol);
  return {detail::sub_block(dil_abs, n, n), detail::sub_block(dil_abs, 0, n)};
}

/// |x| = (x* x)^{1/2} for a general element.
inline HermitianMatrix abs_general(const ComplexMatrix& x, const Tolerances& tol = default_tolerances()) {
  return polar_magnitudes(x, tol).abs;
}

/// Orthogonal projection onto the column space of x. Singular values at or
/// below tol_zero * ||x|| count as zero.
inline HermitianMatrix range_projection(const ComplexMatrix& x, const Tolerances& tol = default_tolerances()) {
  const std::size_t n = x.dim();
  const Spectrum spec = hermitian_eigendecompose(embed_offdiag(x), tol);
  const double cutoff = tol.tol_zero * spec.max();
  // An eigenvector of the dilation for +sigma > 0 is (u; v)/sqrt(2) with
  // x v = sigma u, and the u parts of an orthonormal eigenbasis stay
  // mutually orthogonal.
  ComplexMatrix p(n);
  for (std::size_t k = 0; k < spec.dim(); ++k) {
    if (!(spec.eigenvalues[k] > cutoff)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex left = 2.0 * spec.eigenvectors(i, k);
      for (std::size_t j = 0; j < n; ++j) p(i, j) += left * std::conj(spec.eigenvectors(j, k));
    }
  }
  return HermitianMatrix(p);
}

/// Largest singular value.
inline double operator_norm(const ComplexMatrix& x, const Tolerances& tol = default_tolerances()) {
  return hermitian_eigendecompose(embed_offdiag(x), tol).max();
}

inline double operator_norm(const HermitianMatrix& a, const Tolerances& tol = default_tolerances()) {
  return hermitian_eigendecompose(a, tol).radius();
}

inline bool is_psd(const HermitianMatrix& a, const Tolerances& tol = default_tolerances()) {
  const Spectrum spec = hermitian_eigendecompose(a, tol);
  return spec.min() >= -psd_slack(spec, tol);
}

/// a <= b in the Loewner order.
inline bool loewner_le(const HermitianMatrix& a, const HermitianMatrix& b,
                       const Tolerances& tol = default_tolerances()) {
  require_same_dim(a.dim(), b.dim(), "loewner_le");
  return is_psd(b - a, tol);
}

inline bool is_comparable(const HermitianMatrix& a, const HermitianMatrix& b,
                          const Tolerances& tol = default_tolerances()) {
  return loewner_le(a, b, tol) || loewner_le(b, a, tol);
}

}  // namespace ortholat

#endif  // ORTHOLAT_SPECTRAL_HPP_
