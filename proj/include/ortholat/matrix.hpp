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
#ifndef ORTHOLAT_MATRIX_HPP_
#define ORTHOLAT_MATRIX_HPP_

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ortholat/error.hpp"

namespace ortholat {

using Complex = std::complex<double>;

/// Dense n x n complex matrix, row-major. An element of M_n(C).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}

  /// Takes ownership of row-major entries; throws InvalidInput on a
  /// non-square size or non-finite entry.
  ComplexMatrix(std::size_t n, std::vector<Complex> entries) : n_(n), data_(std::move(entries)) {
    if (data_.size() != n * n) throw InvalidInput("matrix data is not n*n");
    for (const Complex& z : data_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InvalidInput("matrix entries must be finite");
      }
    }
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) : n_(rows.size()) {
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw InvalidInput("matrix rows must all have length n");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  /// Matrix unit E_ij with 1-based indices, matching the usual notation.
  static ComplexMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    ComplexMatrix m(n);
    m(i - 1, j - 1) = 1.0;
    return m;
  }

  std::size_t dim() const { return n_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix adjoint() const {
    ComplexMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
    }
    return r;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_dim(n_, o.n_, "matrix addition");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_dim(n_, o.n_, "matrix subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) {
    for (Complex& z : data_) z *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a.n_, b.n_, "matrix product");
    const std::size_t n = a.n_;
    ComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex(0.0)) continue;
        for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
      }
    }
    return r;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

/// Self-adjoint matrix, an element of A_sa. Construction symmetrizes its
/// argument as (M + M*)/2, so the stored entries are exactly Hermitian and
/// the diagonal is exactly real.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(std::size_t n) : m_(n) {}
  explicit HermitianMatrix(const ComplexMatrix& m) : m_(m.dim()) {
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i) {
      m_(i, i) = m(i, i).real();
      for (std::size_t j = i + 1; j < n; ++j) {
        const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
        m_(i, j) = z;
        m_(j, i) = std::conj(z);
      }
    }
  }
  HermitianMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : HermitianMatrix(ComplexMatrix(rows)) {}

  static HermitianMatrix identity(std::size_t n) { return HermitianMatrix(ComplexMatrix::identity(n)); }

  static HermitianMatrix diagonal(std::span<const double> d) {
    HermitianMatrix h(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) h.m_(i, i) = d[i];
    return h;
  }
  static HermitianMatrix diagonal(std::initializer_list<double> d) {
    return diagonal(std::span<const double>(d.begin(), d.size()));
  }

  std::size_t dim() const { return m_.dim(); }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const ComplexMatrix& matrix() const { return m_; }
  operator const ComplexMatrix&() const { return m_; }  // NOLINT(google-explicit-constructor)

  double frobenius_norm() const { return m_.frobenius_norm(); }
  double trace() const { return m_.trace().real(); }

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(Exact{}, a.m_ + b.m_);
  }
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(Exact{}, a.m_ - b.m_);
  }
  friend HermitianMatrix operator-(const HermitianMatrix& a) { return HermitianMatrix(Exact{}, -a.m_); }
  friend HermitianMatrix operator*(double s, const HermitianMatrix& a) {
    return HermitianMatrix(Exact{}, a.m_ * Complex(s));
  }
  friend HermitianMatrix operator*(const HermitianMatrix& a, double s) { return s * a; }

  friend ComplexMatrix operator*(const HermitianMatrix& a, const HermitianMatrix& b) { return a.m_ * b.m_; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const HermitianMatrix& b) { return a * b.m_; }
  friend ComplexMatrix operator*(const HermitianMatrix& a, const ComplexMatrix& b) { return a.m_ * b; }

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  struct Exact {};
  // Sums, differences and real multiples of Hermitian matrices stay exactly
  // Hermitian entrywise in IEEE arithmetic.
  HermitianMatrix(Exact, ComplexMatrix m) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

/// Relative Frobenius distance ||x - y||_F / max(1, ||x||_F, ||y||_F).
inline double relative_distance(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x.dim(), y.dim(), "relative_distance");
  const double scale = std::max({1.0, x.frobenius_norm(), y.frobenius_norm()});
  return (x - y).frobenius_norm() / scale;
}

/// ||ab||_F / max(1, ||a||_F ||b||_F), the normalized zero-product residual.
inline double zero_product_residual(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a.dim(), b.dim(), "zero_product_residual");
  const double scale = std::max(1.0, a.frobenius_norm() * b.frobenius_norm());
  return (a * b).frobenius_norm() / scale;
}

/// Largest entrywise modulus of x - y.
inline double max_abs_difference(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x.dim(), y.dim(), "max_abs_difference");
  double m = 0.0;
  for (std::size_t k = 0; k < x.entries().size(); ++k) {
    m = std::max(m, std::abs(x.entries()[k] - y.entries()[k]));
  }
  return m;
}

/// Block matrix diag(a, b) of dimension a.dim() + b.dim().
inline ComplexMatrix block_diagonal(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim();
  ComplexMatrix r(na + b.dim());
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) r(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) r(na + i, na + j) = b(i, j);
  }
  return r;
}

inline HermitianMatrix block_diagonal(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(block_diagonal(a.matrix(), b.matrix()));
}

}  // namespace ortholat

#endif  // ORTHOLAT_MATRIX_HPP_
