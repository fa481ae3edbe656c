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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qwalk {

using cplx = std::complex<double>;

/// Dense row-major complex matrix.
///
/// Value type: copies are deep, and every arithmetic member returns a new
/// matrix. Entry (i, j) lives at entries()[i * cols() + j].
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  /// Nested-list construction, one initializer list per row.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const cplx> d);
  static ComplexMatrix diagonal(std::span<const double> d);
  /// Column vector (n x 1).
  static ComplexMatrix column(std::span<const cplx> v);
  /// |v><w|
  static ComplexMatrix outer(std::span<const cplx> v, std::span<const cplx> w);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const cplx> entries() const { return entries_; }
  std::span<cplx> entries() { return entries_; }
  std::span<const cplx> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<cplx> row(std::size_t i) {
    return {entries_.data() + i * cols_, cols_};
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;

  cplx trace() const;
  std::vector<cplx> diag() const;
  /// Sub-block [r0, r0+nr) x [c0, c0+nc).
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                      std::size_t nc) const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);
  /// this += s * o, through the axpy kernel.
  ComplexMatrix& add_scaled(cplx s, const ComplexMatrix& o);

  double max_abs() const;
  bool all_finite() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);

/// Matrix product. Zero entries of the left factor are skipped, so products
/// with shift, permutation or ladder operators on the left cost O(nnz * n).
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

/// a * b * a^dagger, exploiting sparsity of a on both sides.
ComplexMatrix sandwich(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<cplx> apply(const ComplexMatrix& a, std::span<const cplx> v);

/// max_ij |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// max_ij |m_ij - conj(m_ji)|.
double hermitian_defect(const ComplexMatrix& m);

/// || m m^dagger - I ||_max.
double unitarity_defect(const ComplexMatrix& m);

/// (m + m^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& m);

ComplexMatrix matrix_power(const ComplexMatrix& m, unsigned n);

/// Commutator [a, b] = ab - ba.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qwalk
