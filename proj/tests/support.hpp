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

// Seeded generators shared by the property tests.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qwalk/numkit/complex_matrix.hpp"
#include "qwalk/walks/walks.hpp"

namespace qwalk::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline ProbVec random_pd(std::size_t dim, Rng& rng) {
  std::vector<double> w(dim);
  for (auto& x : w) x = -std::log(1.0 - uniform(rng));
  return ProbVec::normalized(std::move(w));
}

inline std::vector<cplx> random_vector(std::size_t dim, Rng& rng) {
  std::vector<cplx> v(dim);
  for (auto& z : v) z = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
  return v;
}

inline ComplexMatrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  ComplexMatrix m(r, c);
  for (auto& z : m.entries()) z = {uniform(rng, -1, 1), uniform(rng, -1, 1)};
  return m;
}

inline std::vector<cplx> random_unit_vector(std::size_t dim, Rng& rng) {
  auto v = random_vector(dim, rng);
  double n = 0.0;
  for (auto& z : v) n += std::norm(z);
  for (auto& z : v) z /= std::sqrt(n);
  return v;
}

/// Haar-style parametrization of U(2).
inline ComplexMatrix random_unitary2(Rng& rng) {
  const double pi = std::numbers::pi;
  const double theta = uniform(rng, 0, pi / 2);
  const double a = uniform(rng, 0, 2 * pi);
  const double b = uniform(rng, 0, 2 * pi);
  const double g = uniform(rng, 0, 2 * pi);
  const cplx c = std::cos(theta), s = std::sin(theta);
  return ComplexMatrix{
      {c * std::polar(1.0, a), s * std::polar(1.0, b)},
      {-s * std::polar(1.0, g - b), c * std::polar(1.0, g - a)}};
}

/// Random density matrix: normalized G G†.
inline ComplexMatrix random_density(std::size_t dim, Rng& rng) {
  const auto g = random_matrix(dim, dim, rng);
  ComplexMatrix rho = multiply(g, g.adjoint());
  rho *= cplx(1.0 / rho.trace().real());
  return hermitian_part(rho);
}

}  // namespace qwalk::testing
