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

#include "qwalk/numkit/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/simd/kernels.hpp"

namespace qwalk {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t p = b.rows();
  const std::size_t q = b.cols();
  ComplexMatrix out(a.rows() * p, a.cols() * q);
  const auto& k = simd::active_kernels();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0)) continue;
      for (std::size_t r = 0; r < p; ++r) {
        k.caxpy(aij, b.row(r).data(), out.row(i * p + r).data() + j * q, q);
      }
    }
  }
  return out;
}

std::vector<cplx> kron(std::span<const cplx> a, std::span<const cplx> b) {
  std::vector<cplx> out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
  }
  return out;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t dim_a,
                                  std::size_t dim_b) {
  const std::size_t n = dim_a * dim_b;
  if (m.rows() != n || m.cols() != n) {
    throw DimensionMismatch("partial_trace_first: expected " +
                            std::to_string(n) + "-square matrix, got " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
  ComplexMatrix out(dim_b, dim_b);
  const auto& k = simd::active_kernels();
  for (std::size_t a = 0; a < dim_a; ++a) {
    for (std::size_t i = 0; i < dim_b; ++i) {
      k.caxpy(1.0, m.row(a * dim_b + i).data() + a * dim_b, out.row(i).data(),
              dim_b);
    }
  }
  return out;
}

ComplexMatrix hadamard_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("hadamard_product: shape mismatch");
  }
  ComplexMatrix out(a.rows(), a.cols());
  simd::cmul(a.entries(), b.entries(), out.entries());
  return out;
}

ComplexMatrix hadamard_product_conj(const ComplexMatrix& a,
                                    const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("hadamard_product_conj: shape mismatch");
  }
  ComplexMatrix out(a.rows(), a.cols());
  simd::cmul_conj(a.entries(), b.entries(), out.entries());
  return out;
}

double norm_one(const ComplexMatrix& a) {
  std::vector<double> sums(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) sums[j] += std::abs(a(i, j));
  }
  return sums.empty() ? 0.0 : *std::max_element(sums.begin(), sums.end());
}

ComplexMatrix expm(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("expm: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return a;

  const double norm = norm_one(a);
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const ComplexMatrix scaled = a * cplx(std::ldexp(1.0, -squarings));

  ComplexMatrix result = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  // ||scaled|| <= 1/2 bounds the k-th term by 2^-k / k!; 30 terms is far
  // beyond double precision.
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled;
    term *= cplx(1.0 / k);
    result += term;
    if (term.max_abs() <= 1e-18 * std::max(1.0, result.max_abs())) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  if (!result.all_finite()) throw OverflowGuard("expm: non-finite result");
  return result;
}

namespace {

Eigen::MatrixXcd to_eigen_hermitian(const ComplexMatrix& m) {
  if (!m.is_square()) {
    throw DimensionMismatch("Hermitian eigensolver: matrix is not square");
  }
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXcd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uj = static_cast<std::size_t>(j);
      e(i, j) = 0.5 * (m(ui, uj) + std::conj(m(uj, ui)));
    }
  }
  return e;
}

}  // namespace

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m) {
  if (m.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      to_eigen_hermitian(m), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("Hermitian eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double min_eigenvalue_hermitian(const ComplexMatrix& m) {
  const auto ev = eigenvalues_hermitian(m);
  if (ev.empty()) throw DimensionMismatch("min_eigenvalue: empty matrix");
  return ev.front();
}

double trace_norm_hermitian(const ComplexMatrix& m) {
  double s = 0.0;
  for (double x : eigenvalues_hermitian(m)) s += std::abs(x);
  return s;
}

}  // namespace qwalk
