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

// Data-parallel inner loops used by the dense matrix layer.
//
// Each kernel has a scalar reference implementation and, where the host
// supports it, a vectorized variant. The active table is chosen once at
// first use from the CPU feature bits; QWALK_SIMD=scalar in the environment
// forces the reference path.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace qwalk::simd {

using cplx = std::complex<double>;

// y[i] += a * x[i]
using CaxpyFn = void (*)(cplx a, const cplx* x, cplx* y, std::size_t n);
// z[i] = x[i] * y[i]
using CmulFn = void (*)(const cplx* x, const cplx* y, cplx* z, std::size_t n);
// z[i] = x[i] * conj(y[i])
using CmulConjFn = void (*)(const cplx* x, const cplx* y, cplx* z,
                            std::size_t n);
// y[i] += a * x[i]
using DaxpyFn = void (*)(double a, const double* x, double* y, std::size_t n);

struct KernelTable {
  std::string_view name;
  CaxpyFn caxpy;
  CmulFn cmul;
  CmulConjFn cmul_conj;
  DaxpyFn daxpy;
};

enum class Isa { kScalar, kAvx2 };

const KernelTable& scalar_kernels();

/// Null when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* avx2_kernels();

const KernelTable& kernels_for(Isa isa);

/// The table every library routine dispatches through.
const KernelTable& active_kernels();

bool isa_available(Isa isa);

// Convenience wrappers over the active table.
inline void caxpy(cplx a, std::span<const cplx> x, std::span<cplx> y) {
  active_kernels().caxpy(a, x.data(), y.data(), x.size());
}
inline void cmul(std::span<const cplx> x, std::span<const cplx> y,
                 std::span<cplx> z) {
  active_kernels().cmul(x.data(), y.data(), z.data(), x.size());
}
inline void cmul_conj(std::span<const cplx> x, std::span<const cplx> y,
                      std::span<cplx> z) {
  active_kernels().cmul_conj(x.data(), y.data(), z.data(), x.size());
}
inline void daxpy(double a, std::span<const double> x, std::span<double> y) {
  active_kernels().daxpy(a, x.data(), y.data(), x.size());
}

}  // namespace qwalk::simd
