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

#include "qwalk/numkit/real_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/simd/kernels.hpp"

namespace qwalk {

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols,
                       std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("RealMatrix: entry count does not match shape");
  }
}

RealMatrix::RealMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw DimensionMismatch("RealMatrix: ragged initializer list");
    }
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::from_complex(const ComplexMatrix& m, double tol) {
  RealMatrix out(m.rows(), m.cols());
  const auto src = m.entries();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (std::abs(src[i].imag()) > tol) {
      throw DomainError("RealMatrix::from_complex: imaginary part " +
                        std::to_string(src[i].imag()) + " exceeds tolerance");
    }
    out.entries_[i] = src[i].real();
  }
  return out;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

ComplexMatrix RealMatrix::to_complex() const {
  std::vector<cplx> e(entries_.begin(), entries_.end());
  return ComplexMatrix(rows_, cols_, std::move(e));
}

std::vector<double> RealMatrix::row_sums() const {
  std::vector<double> s(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (double x : row(i)) s[i] += x;
  }
  return s;
}

std::vector<double> RealMatrix::col_sums() const {
  std::vector<double> s(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    simd::daxpy(1.0, row(i), s);
  }
  return s;
}

RealMatrix& RealMatrix::operator+=(const RealMatrix& o) {
  return add_scaled(1.0, o);
}

RealMatrix& RealMatrix::operator*=(double s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

RealMatrix& RealMatrix::add_scaled(double s, const RealMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionMismatch("RealMatrix::add_scaled: shape mismatch");
  }
  simd::daxpy(s, o.entries(), entries());
  return *this;
}

RealMatrix operator+(RealMatrix a, const RealMatrix& b) {
  a += b;
  return a;
}

RealMatrix operator*(double s, RealMatrix a) {
  a *= s;
  return a;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("RealMatrix multiply: inner dimension mismatch");
  }
  RealMatrix c(a.rows(), b.cols());
  const auto& k = simd::active_kernels();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const double ail = a(i, l);
      if (ail == 0.0) continue;
      k.daxpy(ail, b.row(l).data(), c.row(i).data(), b.cols());
    }
  }
  return c;
}

std::vector<double> apply(const RealMatrix& a, std::span<const double> v) {
  if (a.cols() != v.size()) {
    throw DimensionMismatch("apply: matrix has " + std::to_string(a.cols()) +
                            " columns, vector has " + std::to_string(v.size()));
  }
  // Column-oriented accumulation so the inner loop runs through the kernel.
  const RealMatrix at = a.transpose();
  std::vector<double> out(a.rows(), 0.0);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0.0) continue;
    simd::daxpy(v[j], at.row(j), out);
  }
  return out;
}

RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        simd::daxpy(aij, b.row(k),
                    out.row(i * b.rows() + k).subspan(j * b.cols(), b.cols()));
      }
    }
  }
  return out;
}

std::vector<double> kron(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
  }
  return out;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("max_abs_diff: shape mismatch");
  }
  return max_abs_diff(a.entries(), b.entries());
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("max_abs_diff: length mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace qwalk
