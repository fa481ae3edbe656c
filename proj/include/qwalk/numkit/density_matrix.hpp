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
#include <span>

#include "qwalk/numkit/complex_matrix.hpp"

namespace qwalk {

struct DensityTolerances {
  double hermitian = 1e-12;
  double trace = 1e-12;
  double min_eigenvalue = -1e-10;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
///
/// Construction checks hermiticity and trace, which are O(dim^2). The PSD
/// condition needs an eigensolve and is only checked by `validated` and
/// `check_positive`; channels built from Kraus operators or unitary
/// conjugation preserve it by construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix mat, DensityTolerances tol = {});

  /// Full check including positivity; use for externally supplied states.
  static DensityMatrix validated(ComplexMatrix mat, DensityTolerances tol = {});

  static DensityMatrix pure(std::span<const cplx> psi);
  /// |site><site| on a dim-dimensional space.
  static DensityMatrix basis_state(std::size_t dim, std::size_t site);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }

  /// Smallest eigenvalue; throws InvalidState when below tol.min_eigenvalue.
  double check_positive(DensityTolerances tol = {}) const;

 private:
  ComplexMatrix mat_;
};

}  // namespace qwalk
