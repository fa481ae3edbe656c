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

#include "qwalk/simd/kernels.hpp"

namespace qwalk::simd {
namespace {

// Written out on re/im parts so the reference does not depend on the
// library's complex multiply (which may take the Annex G NaN path).
void caxpy_scalar(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const double ar = a.real();
  const double ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = x[i].imag();
    y[i] = cplx(y[i].real() + (ar * xr - ai * xi),
                y[i].imag() + (ar * xi + ai * xr));
  }
}

void cmul_scalar(const cplx* x, const cplx* y, cplx* z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    z[i] = cplx(xr * yr - xi * yi, xi * yr + xr * yi);
  }
}

void cmul_conj_scalar(const cplx* x, const cplx* y, cplx* z, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    z[i] = cplx(xr * yr + xi * yi, xi * yr - xr * yi);
  }
}

void daxpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", caxpy_scalar, cmul_scalar,
                                 cmul_conj_scalar, daxpy_scalar};
  return table;
}

}  // namespace qwalk::simd
