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
#include <vector>

#include "qwalk/numkit/complex_matrix.hpp"

namespace qwalk {

/// Kronecker product: entry (i*p + k, j*q + l) = a(i, j) * b(k, l) for b of
/// shape p x q. Row-major tensor layout used everywhere in the library.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<cplx> kron(std::span<const cplx> a, std::span<const cplx> b);

/// Trace over the first tensor factor of a (dim_a*dim_b)-square matrix.
///
/// Throws DimensionMismatch when m is not (dim_a*dim_b)-square.
ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t dim_a,
                                  std::size_t dim_b);

/// Element-wise product; throws DimensionMismatch on shape mismatch.
ComplexMatrix hadamard_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// a ∘ conj(b)
ComplexMatrix hadamard_product_conj(const ComplexMatrix& a,
                                    const ComplexMatrix& b);

/// Matrix exponential by scaling and squaring with a Taylor kernel.
///
/// The argument is scaled by 2^-s until its 1-norm is at most 1/2, the
/// series is summed until terms drop below double precision, and the
/// result is squared s times.
ComplexMatrix expm(const ComplexMatrix& a);

/// Induced 1-norm (max column sum of moduli).
double norm_one(const ComplexMatrix& a);

/// Eigenvalues of the Hermitian part of m, ascending.
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& m);

double min_eigenvalue_hermitian(const ComplexMatrix& m);

/// Sum of |eigenvalues| of the Hermitian part of m.
double trace_norm_hermitian(const ComplexMatrix& m);

}  // namespace qwalk
