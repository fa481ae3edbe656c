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

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define QWALK_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#else
#define QWALK_HAVE_AVX2_KERNELS 0
#endif

namespace qwalk::simd {

#if QWALK_HAVE_AVX2_KERNELS

namespace {

#define QWALK_AVX2 __attribute__((target("avx2,fma")))

// One __m256d holds two interleaved complex doubles: [re0, im0, re1, im1].

QWALK_AVX2 void caxpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const auto* xp = reinterpret_cast<const double*>(x);
  auto* yp = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(xp + 2 * i);
    const __m256d x1 = _mm256_loadu_pd(xp + 2 * i + 4);
    const __m256d s0 = _mm256_mul_pd(ai, _mm256_permute_pd(x0, 0x5));
    const __m256d s1 = _mm256_mul_pd(ai, _mm256_permute_pd(x1, 0x5));
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    const __m256d p0 = _mm256_fmaddsub_pd(ar, x0, s0);
    const __m256d p1 = _mm256_fmaddsub_pd(ar, x1, s1);
    _mm256_storeu_pd(yp + 2 * i,
                     _mm256_add_pd(_mm256_loadu_pd(yp + 2 * i), p0));
    _mm256_storeu_pd(yp + 2 * i + 4,
                     _mm256_add_pd(_mm256_loadu_pd(yp + 2 * i + 4), p1));
  }
  for (; i + 2 <= n; i += 2) {
    const __m256d x0 = _mm256_loadu_pd(xp + 2 * i);
    const __m256d s0 = _mm256_mul_pd(ai, _mm256_permute_pd(x0, 0x5));
    const __m256d p0 = _mm256_fmaddsub_pd(ar, x0, s0);
    _mm256_storeu_pd(yp + 2 * i,
                     _mm256_add_pd(_mm256_loadu_pd(yp + 2 * i), p0));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = cplx(y[i].real() + (a.real() * xr - a.imag() * xi),
                y[i].imag() + (a.real() * xi + a.imag() * xr));
  }
}

QWALK_AVX2 void cmul_avx2(const cplx* x, const cplx* y, cplx* z,
                          std::size_t n) {
  const auto* xp = reinterpret_cast<const double*>(x);
  const auto* yp = reinterpret_cast<const double*>(y);
  auto* zp = reinterpret_cast<double*>(z);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    const __m256d yr = _mm256_movedup_pd(yv);
    const __m256d yi = _mm256_permute_pd(yv, 0xF);
    const __m256d xs = _mm256_permute_pd(xv, 0x5);
    _mm256_storeu_pd(zp + 2 * i,
                     _mm256_fmaddsub_pd(xv, yr, _mm256_mul_pd(xs, yi)));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    z[i] = cplx(xr * yr - xi * yi, xi * yr + xr * yi);
  }
}

QWALK_AVX2 void cmul_conj_avx2(const cplx* x, const cplx* y, cplx* z,
                               std::size_t n) {
  const auto* xp = reinterpret_cast<const double*>(x);
  const auto* yp = reinterpret_cast<const double*>(y);
  auto* zp = reinterpret_cast<double*>(z);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    const __m256d yr = _mm256_movedup_pd(yv);
    const __m256d yi = _mm256_permute_pd(yv, 0xF);
    const __m256d xs = _mm256_permute_pd(xv, 0x5);
    // even lanes: xr*yr + xi*yi, odd lanes: xi*yr - xr*yi
    _mm256_storeu_pd(zp + 2 * i,
                     _mm256_fmsubadd_pd(xv, yr, _mm256_mul_pd(xs, yi)));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    z[i] = cplx(xr * yr + xi * yi, xi * yr - xr * yi);
  }
}

QWALK_AVX2 void daxpy_avx2(double a, const double* x, double* y,
                           std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
    _mm256_storeu_pd(y + i + 4,
                     _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i + 4),
                                     _mm256_loadu_pd(y + i + 4)));
  }
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

#undef QWALK_AVX2

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{"avx2", caxpy_avx2, cmul_avx2, cmul_conj_avx2,
                                 daxpy_avx2};
  static const bool supported = cpu_has_avx2();
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_kernels() { return nullptr; }

#endif

}  // namespace qwalk::simd
