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
#ifndef ORTHOLAT_AXIOMS_HPP_
#define ORTHOLAT_AXIOMS_HPP_

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ortholat/error.hpp"
#include "ortholat/lattice_model.hpp"
#include "ortholat/matrix.hpp"
#include "ortholat/orthogonality.hpp"
#include "ortholat/random.hpp"
#include "ortholat/report.hpp"
#include "ortholat/spectral.hpp"

namespace ortholat {

enum class Carrier { kMatrixSa, kCoordinate };

inline const char* to_string(Carrier c) { return c == Carrier::kMatrixSa ? "matrix-sa" : "coordinate"; }

/// Which concrete ordered space to instantiate, and its dimension.
struct ModelDescriptor {
  Carrier carrier = Carrier::kMatrixSa;
  std::size_t n = 2;
};

template <class Element>
struct OrthTriple {
  Element u;
  Element v;
  Element w;
};

/// M_n(C)_sa with the Loewner cone, order unit I, absolute value from the
/// functional calculus, and u _|_ v iff |u||v| = 0. On positives this is the
/// exact test for absolute infinity-orthogonality.
class MatrixSaModel {
 public:
  using Element = HermitianMatrix;

  explicit MatrixSaModel(std::size_t n, const Tolerances& tol = default_tolerances()) : n_(n), tol_(tol) {}

  std::size_t dim() const { return n_; }
  Carrier carrier() const { return Carrier::kMatrixSa; }
  const Tolerances& tolerances() const { return tol_; }

  Element zero() const { return HermitianMatrix(n_); }
  Element unit() const { return HermitianMatrix::identity(n_); }
  Element sample(Rng& rng) const { return random_hermitian(n_, rng); }
  Element sample_positive(Rng& rng) const { return random_psd(n_, rng); }

  Element abs(const Element& x) const { return ortholat::abs(x, tol_); }
  std::pair<Element, Element> parts(const Element& x) const {
    JordanParts j = jordan_decompose(x, tol_);
    return {std::move(j.pos), std::move(j.neg)};
  }
  double cone_violation(const Element& x) const { return psd_violation(x, tol_); }
  bool in_cone(const Element& x) const { return cone_violation(x) <= tol_.tol_psd; }
  double distance(const Element& x, const Element& y) const { return relative_distance(x, y); }
  double norm(const Element& x) const { return operator_norm(x, tol_); }

  bool orth(const Element& x, const Element& y) const { return alg_orth_sa(x, y, tol_).holds; }

  OrthReport abs_infty_orth_sampled(const Element& p, const Element& q, const SamplingOptions& opt) const {
    return ortholat::abs_infty_orth_sampled(p, q, opt, tol_);
  }

  /// u on one spectral block of a random unitary frame, v and w on the
  /// complementary block, so u _|_ v and u _|_ w by construction.
  OrthTriple<Element> sample_orth_triple(Rng& rng) const {
    if (n_ < 2) return {sample(rng), zero(), zero()};
    const std::size_t k = rng.index(1, n_ - 1);
    const ComplexMatrix frame = random_unitary(n_, rng);
    auto place = [&](const HermitianMatrix& block, bool first) {
      const HermitianMatrix z(first ? n_ - k : k);
      const HermitianMatrix full = first ? block_diagonal(block, z) : block_diagonal(z, block);
      return HermitianMatrix(frame * full * frame.adjoint());
    };
    const HermitianMatrix u = place(random_hermitian(k, rng), true);
    const HermitianMatrix v = place(random_hermitian(n_ - k, rng), false);
    const HermitianMatrix w = place(random_hermitian(n_ - k, rng), false);
    return {u, v, w};
  }

  /// w = sum_i s_i t_i |lambda_i| P_i over the spectral projections of v,
  /// signs s_i = +-1 and t_i in [0, 1], so |w| <= |v| and w commutes with v.
  Element sample_dominated(const Element& v, Rng& rng) const {
    const Spectrum spec = hermitian_eigendecompose(v, tol_);
    std::vector<double> d(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      d[i] = (rng.coin() ? 1.0 : -1.0) * rng.uniform() * std::abs(spec.eigenvalues[i]);
    }
    return conjugate_diagonal(spec.eigenvectors, d);
  }

 private:
  std::size_t n_;
  Tolerances tol_;
};

/// R^n with the coordinatewise cone, order unit (1, ..., 1) and disjoint
/// supports as orthogonality.
class CoordinateModel {
 public:
  using Element = LatticeVector;

  explicit CoordinateModel(std::size_t n, const Tolerances& tol = default_tolerances()) : n_(n), tol_(tol) {}

  std::size_t dim() const { return n_; }
  Carrier carrier() const { return Carrier::kCoordinate; }
  const Tolerances& tolerances() const { return tol_; }

  Element zero() const { return LatticeVector(n_); }
  Element unit() const { return LatticeVector::constant(n_, 1.0); }
  Element sample(Rng& rng) const {
    LatticeVector x(n_);
    for (std::size_t i = 0; i < n_; ++i) x[i] = rng.normal();
    return x;
  }
  Element sample_positive(Rng& rng) const {
    LatticeVector x(n_);
    for (std::size_t i = 0; i < n_; ++i) x[i] = rng.uniform();
    return x;
  }

  Element abs(const Element& x) const { return lattice_abs(x); }
  std::pair<Element, Element> parts(const Element& x) const { return {join(x, zero()), join(-x, zero())}; }
  double cone_violation(const Element& x) const { return ortholat::cone_violation(x); }
  bool in_cone(const Element& x) const { return cone_violation(x) <= tol_.tol_psd; }
  double distance(const Element& x, const Element& y) const {
    return (x - y).sup_norm() / std::max({1.0, x.sup_norm(), y.sup_norm()});
  }
  double norm(const Element& x) const { return x.sup_norm(); }

  bool orth(const Element& x, const Element& y) const { return lattice_orth(x, y, tol_); }

  OrthReport abs_infty_orth_sampled(const Element& p, const Element& q, const SamplingOptions& opt) const {
    return lattice_abs_infty_orth_sampled(p, q, opt, tol_);
  }

  /// Random split of the coordinates: u lives on one part, v and w on the other.
  OrthTriple<Element> sample_orth_triple(Rng& rng) const {
    OrthTriple<Element> t{zero(), zero(), zero()};
    for (std::size_t i = 0; i < n_; ++i) {
      if (rng.coin()) {
        t.u[i] = rng.normal();
      } else {
        t.v[i] = rng.normal();
        t.w[i] = rng.normal();
      }
    }
    return t;
  }

  /// Coordinatewise w_i = s_i t_i |v_i|.
  Element sample_dominated(const Element& v, Rng& rng) const {
    LatticeVector w(n_);
    for (std::size_t i = 0; i < n_; ++i) w[i] = (rng.coin() ? 1.0 : -1.0) * rng.uniform() * std::abs(v[i]);
    return w;
  }

 private:
  std::size_t n_;
  Tolerances tol_;
};

/// Negative control: declares every pair orthogonal. Decompositions
/// u = u+ - u- then stop being unique.
template <class Model>
class BrokenOrthModel : public Model {
 public:
  using Model::Model;
  explicit BrokenOrthModel(const Model& base) : Model(base) {}
  bool orth(const typename Model::Element&, const typename Model::Element&) const { return true; }
};

/// The relation u _|_ v iff |u| is absolutely infinity-orthogonal to |v|,
/// decided exactly by the base model's algebraic test on positives, with a
/// few sampled pairs run alongside as a consistency check.
template <class Model>
class DerivedOrthModel : public Model {
 public:
  DerivedOrthModel(const Model& base, std::size_t sampled_trials, std::uint64_t seed)
      : Model(base), sampled_trials_(sampled_trials), seed_(seed) {}

  bool orth(const typename Model::Element& x, const typename Model::Element& y) const {
    const auto ax = Model::abs(x);
    const auto ay = Model::abs(y);
    const bool exact = Model::orth(ax, ay);
    if (exact && sampled_trials_ > 0) {
      const OrthReport s = Model::abs_infty_orth_sampled(ax, ay, {sampled_trials_, seed_ + calls_++, false});
      if (!s.holds) {
        throw InternalInconsistency("derived orthogonality: exact verdict contradicted by a sampled violation");
      }
    }
    return exact;
  }

 private:
  std::size_t sampled_trials_;
  std::uint64_t seed_;
  mutable std::uint64_t calls_ = 0;
};

/// Positive and negative parts u+ = (|u| + u)/2 and u- = (|u| - u)/2,
/// computed by the model without the cancellation in those formulas.
template <class Model>
std::pair<typename Model::Element, typename Model::Element> positive_parts(const Model& model,
                                                                           const typename Model::Element& u) {
  return model.parts(u);
}

/// The order-unit norm inf{k > 0 : k e +- v in the cone}, in closed form:
/// max |lambda_i(e^{-1/2} v e^{-1/2})| for matrices, max |v_i| / e_i for
/// coordinates. Certified by cone membership of k e +- v at
/// k = result (1 + tol_eq) and strict failure at k = result (1 - 10 tol_eq).
/// Throws NotOrderUnit when e is not strictly positive or certification fails.
inline double order_unit_norm(const HermitianMatrix& v, const HermitianMatrix& e,
                              const Tolerances& tol = default_tolerances()) {
  require_same_dim(v.dim(), e.dim(), "order_unit_norm");
  const Spectrum es = hermitian_eigendecompose(e, tol);
  if (es.dim() > 0 && !(es.min() > 0.0)) throw NotOrderUnit("order_unit_norm: e is not positive definite");
  const HermitianMatrix inv_root = apply_function(es, [](double x) { return 1.0 / std::sqrt(x); });
  const double result = hermitian_eigendecompose(HermitianMatrix(inv_root * v * inv_root), tol).radius();

  const double above = result * (1.0 + tol.tol_eq);
  if (!is_psd(above * e + v, tol) || !is_psd(above * e - v, tol)) {
    throw NotOrderUnit("order_unit_norm: k e +- v not positive at the computed norm");
  }
  if (result > 0.0) {
    const double below = result * (1.0 - 10.0 * tol.tol_eq);
    const bool both = hermitian_eigendecompose(below * e + v, tol).min() >= 0.0 &&
                      hermitian_eigendecompose(below * e - v, tol).min() >= 0.0;
    if (both) throw NotOrderUnit("order_unit_norm: a smaller k still dominates v");
  }
  return result;
}

inline double order_unit_norm(const LatticeVector& v, const LatticeVector& e,
                              const Tolerances& tol = default_tolerances()) {
  require_same_dim(v.dim(), e.dim(), "order_unit_norm");
  double result = 0.0;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!(e[i] > 0.0)) throw NotOrderUnit("order_unit_norm: e has a non-positive coordinate");
    result = std::max(result, std::abs(v[i]) / e[i]);
  }
  const double above = result * (1.0 + tol.tol_eq);
  if (!lattice_le(-1.0 * (above * e), v, tol) || !lattice_le(v, above * e, tol)) {
    throw NotOrderUnit("order_unit_norm: k e +- v not positive at the computed norm");
  }
  if (result > 0.0) {
    const double below = result * (1.0 - 10.0 * tol.tol_eq);
    if (is_positive(below * e + v) && is_positive(below * e - v)) {
      throw NotOrderUnit("order_unit_norm: a smaller k still dominates v");
    }
  }
  return result;
}

/// Samples the five axioms of an absolutely ordered vector space:
///   1. u _|_ 0;
///   2. u _|_ v implies v _|_ u;
///   3. u _|_ v and u _|_ w imply u _|_ (k v + w);
///   4. u = u+ - u- with u+, u- positive and orthogonal, uniquely;
///   5. u _|_ v and |w| <= |v| imply u _|_ w.
/// Orthogonal triples are constructed on complementary blocks so 3 and 5
/// are never vacuous. Uniqueness in 4 is falsified by shifting both parts
/// by a common positive p, which must destroy orthogonality.
template <class Model>
OrthReport check_axioms(const Model& model, std::size_t trials, std::uint64_t seed) {
  const Tolerances& tol = model.tolerances();
  OrthReport r(std::string("axioms[") + to_string(model.carrier()) + "]", tol.tol_eq);
  for (const char* name : {"axiom1", "axiom2", "axiom3", "axiom4_existence", "axiom4_uniqueness", "axiom5"}) {
    r.add(name, 0.0);
  }
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, i));
    const auto u = model.sample(rng);
    const auto g = model.sample(rng);
    const auto t = model.sample_orth_triple(rng);

    r.add_flag("axiom1", model.orth(u, model.zero()));

    const bool generic_sym = model.orth(u, g) == model.orth(g, u);
    const bool triple_sym = model.orth(t.u, t.v) == model.orth(t.v, t.u);
    r.add_flag("axiom2", generic_sym && triple_sym);

    const double k = 2.0 * rng.normal();
    const bool premise3 = model.orth(t.u, t.v) && model.orth(t.u, t.w);
    r.add_flag("axiom3", premise3 && model.orth(t.u, k * t.v + t.w));

    const auto [up, um] = positive_parts(model, u);
    r.add("axiom4_existence", model.cone_violation(up), tol.tol_psd);
    r.add("axiom4_existence", model.cone_violation(um), tol.tol_psd);
    r.add("axiom4_existence", model.distance(up - um, u), tol.tol_eq);
    r.add_flag("axiom4_existence", model.orth(up, um));

    auto p = model.sample_positive(rng);
    const double pn = model.norm(p);
    if (pn > 0.0) {
      p = (std::max(1.0, model.norm(u)) * std::pow(10.0, -3.0 * rng.uniform()) / pn) * p;
      r.add_flag("axiom4_uniqueness", !model.orth(up + p, um + p));
    }

    const auto w = model.sample_dominated(t.v, rng);
    const bool dominated = model.cone_violation(model.abs(t.v) - model.abs(w)) <= tol.tol_psd;
    r.add_flag("axiom5", dominated && model.orth(t.u, t.v) && model.orth(t.u, w));
  }
  return r;
}

/// Sample-scale check of the normed characterization. The decomposition
/// u = u+ - u- has u+ _|_ u-, exactly and under sampled infinity checks;
/// for u positive and v, w on the complementary block, u _|_ |v + w| and
/// u _|_ |v - w|; and the relation u _|_ v iff |u| is absolutely
/// infinity-orthogonal to |v| satisfies all five axioms.
template <class Model>
OrthReport check_theorem7(const Model& model, std::size_t trials, std::uint64_t seed,
                          std::size_t sampled_trials = 2) {
  const Tolerances& tol = model.tolerances();
  OrthReport r(std::string("theorem7[") + to_string(model.carrier()) + "]", tol.tol_eq);
  r.add("parts_exact", 0.0);
  r.add("block_exact", 0.0);
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, 3 * i));
    const auto u = model.sample(rng);
    const auto [up, um] = positive_parts(model, u);
    r.add_flag("parts_exact", model.orth(up, um));
    r.merge(model.abs_infty_orth_sampled(up, um, {sampled_trials, derive_seed(seed, 3 * i + 1), false}), "parts_");

    const auto t = model.sample_orth_triple(rng);
    const auto pu = model.abs(t.u);
    const auto sum = model.abs(t.v + t.w);
    const auto diff = model.abs(t.v - t.w);
    r.add_flag("block_exact", model.orth(pu, sum) && model.orth(pu, diff));
    r.merge(model.abs_infty_orth_sampled(pu, sum, {sampled_trials, derive_seed(seed, 3 * i + 2), false}), "block_sum_");
    r.merge(model.abs_infty_orth_sampled(pu, diff, {sampled_trials, derive_seed(seed, 3 * i + 2) ^ 1, false}),
            "block_diff_");
  }
  const DerivedOrthModel<Model> derived(model, sampled_trials, derive_seed(seed, ~std::uint64_t{0}));
  r.merge(check_axioms(derived, trials, derive_seed(seed, trials * 3 + 7)), "derived_");
  return r;
}

}  // namespace ortholat

#endif  // ORTHOLAT_AXIOMS_HPP_
