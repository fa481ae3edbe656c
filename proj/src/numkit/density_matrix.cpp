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

#include "qwalk/numkit/density_matrix.hpp"

#include <cmath>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/numkit/linalg.hpp"

namespace qwalk {

DensityMatrix::DensityMatrix(ComplexMatrix mat, DensityTolerances tol)
    : mat_(std::move(mat)) {
  if (!mat_.is_square() || mat_.rows() == 0) {
    throw DimensionMismatch("DensityMatrix: matrix must be non-empty square");
  }
  if (!mat_.all_finite()) throw InvalidState("DensityMatrix: non-finite entry");
  const double herm = hermitian_defect(mat_);
  if (herm > tol.hermitian) {
    throw InvalidState("DensityMatrix: hermiticity defect " +
                       std::to_string(herm));
  }
  const cplx tr = mat_.trace();
  if (std::abs(tr - 1.0) > tol.trace) {
    throw InvalidState("DensityMatrix: trace deviates from 1 by " +
                       std::to_string(std::abs(tr - 1.0)));
  }
}

DensityMatrix DensityMatrix::validated(ComplexMatrix mat,
                                       DensityTolerances tol) {
  DensityMatrix rho(std::move(mat), tol);
  rho.check_positive(tol);
  return rho;
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> psi) {
  double norm2 = 0.0;
  for (const auto& z : psi) norm2 += std::norm(z);
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw InvalidState("DensityMatrix::pure: state norm^2 = " +
                       std::to_string(norm2));
  }
  return DensityMatrix(ComplexMatrix::outer(psi, psi));
}

DensityMatrix DensityMatrix::basis_state(std::size_t dim, std::size_t site) {
  if (site >= dim) throw DomainError("basis_state: site out of range");
  ComplexMatrix m(dim, dim);
  m(site, site) = 1.0;
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= cplx(1.0 / static_cast<double>(dim));
  return DensityMatrix(std::move(m));
}

double DensityMatrix::check_positive(DensityTolerances tol) const {
  const double lo = min_eigenvalue_hermitian(mat_);
  if (lo < tol.min_eigenvalue) {
    throw InvalidState("DensityMatrix: smallest eigenvalue " +
                       std::to_string(lo));
  }
  return lo;
}

}  // namespace qwalk
