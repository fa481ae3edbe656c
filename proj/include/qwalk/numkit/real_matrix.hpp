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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qwalk/numkit/complex_matrix.hpp"

namespace qwalk {

/// Dense row-major real matrix; the storage behind transition matrices.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols);
  RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  RealMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static RealMatrix identity(std::size_t n);
  /// Real part of m; throws DomainError if any imaginary part exceeds tol.
  static RealMatrix from_complex(const ComplexMatrix& m, double tol = 1e-12);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const double> entries() const { return entries_; }
  std::span<double> entries() { return entries_; }
  std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<double> row(std::size_t i) {
    return {entries_.data() + i * cols_, cols_};
  }

  RealMatrix transpose() const;
  ComplexMatrix to_complex() const;

  std::vector<double> row_sums() const;
  std::vector<double> col_sums() const;

  RealMatrix& operator+=(const RealMatrix& o);
  RealMatrix& operator*=(double s);
  RealMatrix& add_scaled(double s, const RealMatrix& o);

  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

RealMatrix operator+(RealMatrix a, const RealMatrix& b);
RealMatrix operator*(double s, RealMatrix a);
RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);

std::vector<double> apply(const RealMatrix& a, std::span<const double> v);

RealMatrix kron(const RealMatrix& a, const RealMatrix& b);
std::vector<double> kron(std::span<const double> a, std::span<const double> b);

double max_abs_diff(const RealMatrix& a, const RealMatrix& b);
double max_abs_diff(std::span<const double> a, std::span<const double> b);

}  // namespace qwalk
