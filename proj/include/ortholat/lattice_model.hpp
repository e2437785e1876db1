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
#ifndef ORTHOLAT_LATTICE_MODEL_HPP_
#define ORTHOLAT_LATTICE_MODEL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "ortholat/error.hpp"
#include "ortholat/orthogonality.hpp"
#include "ortholat/random.hpp"
#include "ortholat/report.hpp"
#include "ortholat/tolerances.hpp"

namespace ortholat {

/// Element of R^n with the coordinatewise order and the sup norm, the
/// finite model C(X) of a unital AM-space with order unit (1, ..., 1).
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : coords_(n, 0.0) {}
  explicit LatticeVector(std::vector<double> coords) : coords_(std::move(coords)) {
    for (double x : coords_) {
      if (!std::isfinite(x)) throw InvalidInput("lattice vector coordinates must be finite");
    }
  }
  LatticeVector(std::initializer_list<double> coords) : LatticeVector(std::vector<double>(coords)) {}

  static LatticeVector constant(std::size_t n, double value) { return LatticeVector(std::vector<double>(n, value)); }

  std::size_t dim() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }

  double sup_norm() const {
    double m = 0.0;
    for (double x : coords_) m = std::max(m, std::abs(x));
    return m;
  }

  template <class Op>
  friend LatticeVector zip(const LatticeVector& x, const LatticeVector& y, Op op) {
    require_same_dim(x.dim(), y.dim(), "lattice operation");
    LatticeVector r(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) r.coords_[i] = op(x.coords_[i], y.coords_[i]);
    return r;
  }

  friend LatticeVector operator+(const LatticeVector& x, const LatticeVector& y) {
    return zip(x, y, [](double a, double b) { return a + b; });
  }
  friend LatticeVector operator-(const LatticeVector& x, const LatticeVector& y) {
    return zip(x, y, [](double a, double b) { return a - b; });
  }
  friend LatticeVector operator-(LatticeVector x) {
    for (double& c : x.coords_) c = -c;
    return x;
  }
  friend LatticeVector operator*(double s, LatticeVector x) {
    for (double& c : x.coords_) c *= s;
    return x;
  }
  friend LatticeVector operator*(const LatticeVector& x, double s) { return s * x; }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

 private:
  std::vector<double> coords_;
};

inline LatticeVector meet(const LatticeVector& x, const LatticeVector& y) {
  return zip(x, y, [](double a, double b) { return std::min(a, b); });
}

inline LatticeVector join(const LatticeVector& x, const LatticeVector& y) {
  return zip(x, y, [](double a, double b) { return std::max(a, b); });
}

/// |x| = x v (-x).
inline LatticeVector lattice_abs(const LatticeVector& x) { return join(x, -x); }

struct LatticeOps {
  LatticeVector meet;
  LatticeVector join;
};

inline LatticeOps lattice_ops(const LatticeVector& x, const LatticeVector& y) { return {meet(x, y), join(x, y)}; }

inline bool is_positive(const LatticeVector& x) {
  return std::all_of(x.coords().begin(), x.coords().end(), [](double c) { return c >= 0.0; });
}

/// Largest shortfall below zero, relative to max(1, ||x||).
inline double cone_violation(const LatticeVector& x) {
  double worst = 0.0;
  for (double c : x.coords()) worst = std::max(worst, -c);
  return worst / std::max(1.0, x.sup_norm());
}

/// x <= y coordinatewise, within tol_psd.
inline bool lattice_le(const LatticeVector& x, const LatticeVector& y, const Tolerances& tol = default_tolerances()) {
  return cone_violation(y - x) <= tol.tol_psd;
}

/// Disjointness |x| ^ |y| = 0: min(|x_i|, |y_i|) <= tol_zero for every i.
inline bool lattice_orth(const LatticeVector& x, const LatticeVector& y, const Tolerances& tol = default_tolerances()) {
  require_same_dim(x.dim(), y.dim(), "lattice_orth");
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (std::min(std::abs(x[i]), std::abs(y[i])) > tol.tol_zero) return false;
  }
  return true;
}

/// ||u + k v|| = max(||u||, |k| ||v||) under the sup norm, for k in grid.
inline OrthReport lattice_infty_orth(const LatticeVector& u, const LatticeVector& v, const KGrid& grid,
                                     const Tolerances& tol = default_tolerances()) {
  require_same_dim(u.dim(), v.dim(), "lattice_infty_orth");
  const double nu = u.sup_norm();
  const double nv = v.sup_norm();
  OrthReport r("lattice_infty_orth", tol.tol_eq);
  for (const double k : grid.values()) {
    const double lhs = (u + k * v).sup_norm();
    const double rhs = std::max(nu, std::abs(k) * nv);
    r.add("norm_deviation", std::abs(lhs - rhs) / std::max({1.0, nu, std::abs(k) * nv}), tol.tol_eq);
  }
  return r;
}

/// Uniform sample from the box [0, u] (the order interval in R^n).
inline LatticeVector sample_box(const LatticeVector& u, Rng& rng) {
  LatticeVector r(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) r[i] = rng.uniform() * u[i];
  return r;
}

/// Sampled absolute infinity-orthogonality of positive u, v: pairs from
/// [0, u] x [0, v], each checked on its own KGrid.
inline OrthReport lattice_abs_infty_orth_sampled(const LatticeVector& u, const LatticeVector& v,
                                                 const SamplingOptions& opt,
                                                 const Tolerances& tol = default_tolerances()) {
  require_same_dim(u.dim(), v.dim(), "lattice_abs_infty_orth_sampled");
  if (!is_positive(u) || !is_positive(v)) throw NotPositive("lattice_abs_infty_orth_sampled: negative coordinate");
  OrthReport r("abs_infty_orth", tol.tol_eq);
  for (std::size_t i = 0; i < opt.trials; ++i) {
    Rng rng(derive_seed(opt.seed, i));
    const LatticeVector u1 = sample_box(u, rng);
    const LatticeVector v1 = sample_box(v, rng);
    r.merge(lattice_infty_orth(u1, v1, KGrid::for_norms(u1.sup_norm(), v1.sup_norm()), tol), "sampled_");
    if (!r.holds && opt.stop_at_first_violation) break;
  }
  return r;
}

/// u meet y and x join y satisfy: u <= x, u <= y, (x - u) disjoint from
/// (y - u), and dually for the join; the half-sum identities agree with
/// min and max; and perturbations of the meet never satisfy all three.
inline OrthReport verify_corollary5(const LatticeVector& x, const LatticeVector& y, std::size_t trials = 64,
                                    std::uint64_t seed = 0, const Tolerances& tol = default_tolerances()) {
  require_same_dim(x.dim(), y.dim(), "verify_corollary5");
  const LatticeVector u = meet(x, y);
  const LatticeVector v = join(x, y);
  const LatticeVector gap = lattice_abs(x - y);
  const double scale = std::max({1.0, x.sup_norm(), y.sup_norm()});

  OrthReport r("corollary5", tol.tol_eq);
  r.add("u<=x", cone_violation(x - u), tol.tol_psd);
  r.add("u<=y", cone_violation(y - u), tol.tol_psd);
  r.add_flag("(x-u)_|_(y-u)", lattice_orth(x - u, y - u, tol));
  r.add("x<=v", cone_violation(v - x), tol.tol_psd);
  r.add("y<=v", cone_violation(v - y), tol.tol_psd);
  r.add_flag("(v-x)_|_(v-y)", lattice_orth(v - x, v - y, tol));
  r.add("meet=(x+y-|x-y|)/2", (0.5 * (x + y - gap) - u).sup_norm() / scale, tol.tol_eq);
  r.add("join=(x+y+|x-y|)/2", (0.5 * (x + y + gap) - v).sup_norm() / scale, tol.tol_eq);

  const double spread = (x - y).sup_norm() > 0.0 ? (x - y).sup_norm() : 1.0;
  std::size_t survivors = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, i));
    LatticeVector delta(x.dim());
    for (std::size_t j = 0; j < x.dim(); ++j) delta[j] = (i % 2 == 1) ? -rng.uniform() : rng.normal();
    if (delta.sup_norm() == 0.0) continue;
    delta = (spread * std::pow(10.0, -3.0 * rng.uniform()) / delta.sup_norm()) * delta;
    const LatticeVector w = u + delta;
    if (lattice_le(w, x, tol) && lattice_le(w, y, tol) && lattice_orth(x - w, y - w, tol)) ++survivors;
  }
  r.add("surviving_perturbations", static_cast<double>(survivors), tol.tol_eq);
  return r;
}

/// ||u|| <= ||v|| whenever |u| <= |v|. Vacuous (residual 0) when the
/// hypothesis fails.
inline OrthReport am_monotone_law(const LatticeVector& u, const LatticeVector& v,
                                  const Tolerances& tol = default_tolerances()) {
  require_same_dim(u.dim(), v.dim(), "am_monotone_law");
  OrthReport r("am_monotone", tol.tol_eq);
  const bool hypothesis = lattice_le(lattice_abs(u), lattice_abs(v), tol);
  const double excess = hypothesis ? std::max(0.0, u.sup_norm() - v.sup_norm()) : 0.0;
  r.add("||u||<=||v||", excess / std::max(1.0, v.sup_norm()), tol.tol_eq);
  return r;
}

/// ||u v v|| = max(||u||, ||v||) for positive u, v.
inline OrthReport am_join_law(const LatticeVector& u, const LatticeVector& v,
                              const Tolerances& tol = default_tolerances()) {
  require_same_dim(u.dim(), v.dim(), "am_join_law");
  if (!is_positive(u) || !is_positive(v)) throw PreconditionFailed("am_join_law: inputs must be positive");
  OrthReport r("am_join", tol.tol_eq);
  const double rhs = std::max(u.sup_norm(), v.sup_norm());
  r.add("||u v v||=max", std::abs(join(u, v).sup_norm() - rhs) / std::max(1.0, rhs), tol.tol_eq);
  return r;
}

/// inf{k > 0 : k e +- v >= 0} by bisection on the cone test, for comparing
/// against closed forms.
inline double order_unit_norm_bisect(const LatticeVector& v, const LatticeVector& e) {
  require_same_dim(v.dim(), e.dim(), "order_unit_norm_bisect");
  auto dominated = [&](double k) { return is_positive(k * e + v) && is_positive(k * e - v); };
  if (dominated(0.0)) return 0.0;
  double hi = 1.0;
  while (!dominated(hi)) {
    hi *= 2.0;
    if (hi > 1e300) throw NotOrderUnit("order_unit_norm_bisect: e does not dominate v");
  }
  double lo = 0.0;
  for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (dominated(mid) ? hi : lo) = mid;
  }
  return hi;
}

/// The order-unit norm for e = (1, ..., 1) equals the sup norm.
inline OrthReport order_unit_norm_law(const LatticeVector& v, const Tolerances& tol = default_tolerances()) {
  OrthReport r("order_unit_norm", tol.tol_eq);
  const double k = order_unit_norm_bisect(v, LatticeVector::constant(v.dim(), 1.0));
  r.add("inf{k}=||v||", std::abs(k - v.sup_norm()) / std::max(1.0, v.sup_norm()), tol.tol_eq);
  return r;
}

/// Both AM-space norm axioms and the order-unit norm identity on positive
/// u, v. The monotone law is exercised on (u, v) and on the always
/// non-vacuous pair (u ^ v, u). Throws PreconditionFailed on negatives.
inline OrthReport am_norm_laws(const LatticeVector& u, const LatticeVector& v,
                               const Tolerances& tol = default_tolerances()) {
  OrthReport r("am_norm_laws", tol.tol_eq);
  r.merge(am_join_law(u, v, tol));
  r.merge(am_monotone_law(u, v, tol));
  r.merge(am_monotone_law(meet(u, v), u, tol));
  r.merge(order_unit_norm_law(u, tol));
  r.merge(order_unit_norm_law(v, tol));
  return r;
}

/// Disjointness coincides with absolute infinity-orthogonality on positives.
/// Disjoint u, v: sampled boxes never violate infinity-orthogonality.
/// Otherwise w = u ^ v lies in both intervals and ||w + w|| = 2||w|| != ||w||,
/// so the pair (w, w) at k = 1 must register a violation.
inline OrthReport prop6_check(const LatticeVector& u, const LatticeVector& v, std::size_t trials,
                              std::uint64_t seed, const Tolerances& tol = default_tolerances()) {
  require_same_dim(u.dim(), v.dim(), "prop6_check");
  if (!is_positive(u) || !is_positive(v)) throw PreconditionFailed("prop6_check: inputs must be positive");
  OrthReport r("prop6", tol.tol_eq);
  if (lattice_orth(u, v, tol)) {
    r.merge(lattice_abs_infty_orth_sampled(u, v, {trials, seed, false}, tol), "disjoint_");
  } else {
    const LatticeVector w = meet(u, v);
    const OrthReport at_one = lattice_infty_orth(w, w, KGrid({1.0}), tol);
    r.add_flag("violation_found", !at_one.holds);
  }
  return r;
}

}  // namespace ortholat

#endif  // ORTHOLAT_LATTICE_MODEL_HPP_
