// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/numkit/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/simd/kernels.hpp"

namespace qwalk {
namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(what) + ": shape " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("ComplexMatrix: entry count " +
                            std::to_string(entries_.size()) +
                            " does not match " + std::to_string(rows) + "x" +
                            std::to_string(cols));
  }
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw DimensionMismatch("ComplexMatrix: ragged initializer list");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const cplx> v) {
  return ComplexMatrix(v.size(), 1, std::vector<cplx>(v.begin(), v.end()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const cplx> v,
                                   std::span<const cplx> w) {
  ComplexMatrix m(v.size(), w.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
  }
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out = *this;
  for (auto& z : out.entries_) z = std::conj(z);
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  const std::size_t n = std::min(rows_, cols_);
  for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
  return t;
}

std::vector<cplx> ComplexMatrix::diag() const {
  const std::size_t n = std::min(rows_, cols_);
  std::vector<cplx> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = (*this)(i, i);
  return d;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0,
                                   std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw DimensionMismatch("ComplexMatrix::block: out of range");
  }
  ComplexMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    std::copy_n(entries_.begin() + (r0 + i) * cols_ + c0, nc,
                out.entries_.begin() + i * nc);
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  return add_scaled(1.0, o);
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  return add_scaled(-1.0, o);
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& z : entries_) z *= s;
  return *this;
}

ComplexMatrix& ComplexMatrix::add_scaled(cplx s, const ComplexMatrix& o) {
  require_same_shape(*this, o, "add");
  simd::caxpy(s, o.entries(), entries());
  return *this;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a) {
  a *= s;
  return a;
}

ComplexMatrix operator*(ComplexMatrix a, cplx s) {
  a *= s;
  return a;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: inner dimensions " +
                            std::to_string(a.cols()) + " and " +
                            std::to_string(b.rows()));
  }
  ComplexMatrix c(a.rows(), b.cols());
  const auto& k = simd::active_kernels();
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx* crow = c.row(i).data();
    const auto arow = a.row(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const cplx aik = arow[l];
      if (aik.real() == 0.0 && aik.imag() == 0.0) continue;
      k.caxpy(aik, b.row(l).data(), crow, n);
    }
  }
  return c;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return multiply(a, b);
}

ComplexMatrix sandwich(const ComplexMatrix& a, const ComplexMatrix& b) {
  // a b a^dagger = (a (a b)^dagger)^dagger; both products keep a on the left.
  const ComplexMatrix ab = multiply(a, b);
  return multiply(a, ab.adjoint()).adjoint();
}

std::vector<cplx> apply(const ComplexMatrix& a, std::span<const cplx> v) {
  if (a.cols() != v.size()) {
    throw DimensionMismatch("apply: matrix has " + std::to_string(a.cols()) +
                            " columns, vector has " + std::to_string(v.size()));
  }
  std::vector<cplx> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    const auto r = a.row(i);
    for (std::size_t j = 0; j < v.size(); ++j) s += r[j] * v[j];
    out[i] = s;
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    m = std::max(m, std::abs(ea[i] - eb[i]));
  }
  return m;
}

double hermitian_defect(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("hermitian_defect: not square");
  double d = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return d;
}

double unitarity_defect(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("unitarity_defect: not square");
  return max_abs_diff(m * m.adjoint(), ComplexMatrix::identity(m.rows()));
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("hermitian_part: not square");
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    }
  }
  return out;
}

ComplexMatrix matrix_power(const ComplexMatrix& m, unsigned n) {
  if (!m.is_square()) throw DimensionMismatch("matrix_power: not square");
  ComplexMatrix result = ComplexMatrix::identity(m.rows());
  ComplexMatrix base = m;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

}  // namespace qwalk
