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

#include <cmath>

#include "doctest.h"
#include "qwalk/error.hpp"
#include "qwalk/majorization/majorization.hpp"
#include "qwalk/walks/walks.hpp"
#include "support.hpp"

using namespace qwalk;
using qwalk::testing::Rng;

namespace {

ProbVec offsets(std::size_t n, std::initializer_list<std::pair<long, double>> w) {
  std::vector<double> p(n, 0.0);
  for (auto [off, x] : w) {
    p[static_cast<std::size_t>((off % static_cast<long>(n) + static_cast<long>(n)) %
                               static_cast<long>(n))] = x;
  }
  return ProbVec(p);
}

double max_diff(const RealMatrix& a, const RealMatrix& b) { return max_abs_diff(a, b); }

}  // namespace

TEST_SUITE("walks") {
  TEST_CASE("ProbVec validation") {
    CHECK_NOTHROW(ProbVec({0.5, 0.5}));
    CHECK_THROWS_AS(ProbVec({0.5, 0.6}), DomainError);
    CHECK_THROWS_AS(ProbVec({1.5, -0.5}), DomainError);
    CHECK_THROWS_AS(ProbVec(std::vector<double>{}), DomainError);
    // Round-off negatives are clamped.
    const ProbVec p({1.0 + 5e-13, -5e-13});
    CHECK(p[1] == 0.0);
  }

  TEST_CASE("lattice labels are centered") {
    const WalkLattice lat(5);
    CHECK(lat.min_label() == -2);
    CHECK(lat.max_label() == 2);
    CHECK(lat.index(0) == 2);
    CHECK(lat.label(0) == -2);
    CHECK(lat.difference(2, -2) == -1);
    CHECK_THROWS_AS(lat.index(3), DomainError);
    CHECK_THROWS_AS(WalkLattice(1), DomainError);
  }

  TEST_CASE("shift operators") {
    const WalkLattice lat(3);
    const auto ops = shift_operators(lat);
    // e_m -> e_{m+1 mod 3}
    CHECK(ops.e_plus(1, 0) == cplx(1.0));
    CHECK(ops.e_plus(2, 1) == cplx(1.0));
    CHECK(ops.e_plus(0, 2) == cplx(1.0));
    CHECK(commutator(ops.e_plus, ops.e_minus).max_abs() == 0.0);

    const WalkLattice big(7);
    const auto b = shift_operators(big);
    const auto c = commutator(b.distance, b.e_plus);
    // [L, E+] = E+ on columns whose shift stays inside the window.
    for (std::size_t j = 0; j + 1 < 7; ++j) {
      for (std::size_t i = 0; i < 7; ++i) CHECK(c(i, j) == b.e_plus(i, j));
    }
    const auto t = shift_operators(WalkLattice(4, Boundary::kTruncated));
    CHECK(t.e_plus(0, 3) == cplx(0.0));
  }

  TEST_CASE("delta matrix examples") {
    const WalkLattice lat(4);
    CHECK(max_diff(delta_matrix(ProbVec::point_mass(4, 0), lat).matrix(),
                   RealMatrix::identity(4)) == 0.0);
    const auto u = delta_matrix(ProbVec::uniform(4), lat);
    for (double x : u.matrix().entries()) CHECK(x == 0.25);

    const auto d = delta_matrix(offsets(4, {{1, 0.5}, {-1, 0.5}}), lat);
    CHECK(d(0, 0) == 0.0);
    CHECK(d(1, 0) == 0.5);
    CHECK(d(2, 0) == 0.0);
    CHECK(d(3, 0) == 0.5);
    CHECK(d.kind() == StochKind::kBistochastic);
    CHECK_THROWS_AS(delta_matrix(ProbVec::uniform(3), lat), DimensionMismatch);
  }

  TEST_CASE("cyclic delta matrices are circulant") {
    Rng rng(11);
    const std::size_t n = 9;
    const auto d = delta_matrix(testing::random_pd(n, rng), WalkLattice(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(d(i, j) == d((i + 1) % n, (j + 1) % n));
  }

  TEST_CASE("truncated delta keeps non-wrapping offsets without renormalizing") {
    const WalkLattice lat(5, Boundary::kTruncated);
    const auto d = delta_matrix(offsets(5, {{1, 0.5}, {-1, 0.5}}), lat);
    CHECK(d.kind() == StochKind::kGeneral);
    CHECK(d(0, 4) == 0.0);
    CHECK(d.matrix().col_sums()[4] == 0.5);
    // Mass leaving the window is an error, not silently renormalized.
    CHECK_THROWS_AS(step(d, ProbVec::point_mass(5, 4)), NormalizationLost);
    CHECK_NOTHROW(step(d, ProbVec::point_mass(5, 2)));
  }

  TEST_CASE("step examples") {
    const WalkLattice lat(5);
    const auto p = step(polya(lat), ProbVec::point_mass(5, 0));
    CHECK(p == ProbVec({0, 0.5, 0, 0, 0.5}));
    Rng rng(12);
    const auto q = testing::random_pd(5, rng);
    CHECK(max_abs_diff(step(delta_matrix(ProbVec::uniform(5), lat), q).entries(),
                       ProbVec::uniform(5).entries()) < 1e-15);
    CHECK(step(delta_matrix(ProbVec::point_mass(5, 0), lat), q) == q);
  }

  TEST_CASE("semigroup: n steps equal the matrix power") {
    Rng rng(13);
    const std::size_t n = 11;
    const auto d = delta_matrix(testing::random_pd(n, rng), WalkLattice(n));
    const auto p0 = testing::random_pd(n, rng);
    RealMatrix power = RealMatrix::identity(n);
    for (std::size_t k = 1; k <= 64; ++k) {
      power = d.matrix() * power;
      if (k % 16 == 0) {
        CHECK(max_abs_diff(evolve(d, p0, k).entries(), qwalk::apply(power, p0.entries())) <
              1e-11);
      }
    }
  }

  TEST_CASE("Polya walk") {
    const WalkLattice lat(7);
    const auto d = polya(lat);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) {
        const long dist = std::labs(lat.difference(lat.label(i), lat.label(j)));
        CHECK(d(i, j) == (dist == 1 ? 0.5 : 0.0));
      }
    CHECK(is_bistochastic(d, 1e-10));
  }

  TEST_CASE("Gillis walk") {
    const WalkLattice lat(9);
    const auto d = gillis(lat, 0.5);
    const std::size_t o = lat.origin();
    CHECK(d(o - 1, o) == 0.5);
    CHECK(d(o + 1, o) == 0.5);
    // Source label 2: (1 + eps/2)/2 towards the origin.
    const std::size_t s = lat.index(2);
    CHECK(d(lat.index(1), s) == doctest::Approx(0.625));
    CHECK(d(lat.index(3), s) == doctest::Approx(0.375));
    CHECK(d.kind() == StochKind::kColumnStochastic);
    CHECK_FALSE(is_bistochastic(d, 1e-10));
    CHECK_THROWS_AS(gillis(lat, 1.0), DomainError);

    Rng rng(14);
    for (int t = 0; t < 20; ++t) {
      const auto g = gillis(lat, testing::uniform(rng, -0.99, 0.99));
      for (double c : g.matrix().col_sums()) CHECK(c == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  TEST_CASE("LS walk") {
    const WalkLattice lat(11);
    const auto d = ls_walk(lat, 1.0);
    for (std::size_t i = 0; i < 11; ++i) CHECK(d(i, i) == 0.0);
    CHECK(is_bistochastic(d, 1e-10));
    // Ratios between off-diagonal entries follow e^{-eps |l - l'|}.
    const std::size_t o = lat.origin();
    CHECK(d(o + 2, o) / d(o + 1, o) == doctest::Approx(std::exp(-1.0)));
    // Infinite-lattice normalization: (e^eps - 1) sum_{k>=1} e^{-k eps} = 1.
    const double eps = 0.7;
    double geo = 0.0;
    for (int k = 1; k < 200; ++k) geo += std::exp(-k * eps);
    CHECK(std::expm1(eps) * geo == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(ls_walk(lat, 0.0), DomainError);
  }

  TEST_CASE("limits towards the Polya walk") {
    const WalkLattice lat(11);
    const auto dp = polya(lat).matrix();
    CHECK(max_diff(gillis(lat, 1e-8).matrix(), dp) < 1e-7);
    CHECK(max_diff(ls_walk(lat, 20.0).matrix(), dp) < 1e-6);
  }

  TEST_CASE("two-dimensional Gillis mixture") {
    const WalkLattice lat(5);
    const auto zero = gillis2d(lat, {0.0, 0, 1}, {0.0, 1, 2}, 0.3);
    CHECK(max_diff(zero.matrix(), kron(polya(lat).matrix(), polya(lat).matrix())) <
          1e-15);

    const GillisAxis a{0.4, 1, 1}, b{-0.3, -1, 2};
    const auto d1 = gillis_general(lat, a.eps, a.center, a.exponent).matrix();
    const auto d2 = gillis_general(lat, b.eps, b.center, b.exponent).matrix();
    CHECK(max_diff(gillis2d(lat, a, b, 1.0).matrix(), kron(d1, d2)) < 1e-15);

    // q = 1/2 is symmetric under swapping the tensor factors.
    const auto half = gillis2d(lat, a, b, 0.5).matrix();
    const std::size_t n = 5;
    for (std::size_t i = 0; i < n * n; ++i)
      for (std::size_t j = 0; j < n * n; ++j) {
        const std::size_t si = (i % n) * n + i / n;
        const std::size_t sj = (j % n) * n + j / n;
        CHECK(half(i, j) == doctest::Approx(half(si, sj)).epsilon(1e-15));
      }

    Rng rng(15);
    for (int t = 0; t < 20; ++t) {
      const WalkLattice l(t % 2 ? 5 : 7);
      const GillisAxis x{testing::uniform(rng, -0.9, 0.9), 0, 1 + t % 3};
      const GillisAxis y{testing::uniform(rng, -0.9, 0.9), 1, 1 + t % 2};
      const auto g = gillis2d(l, x, y, testing::uniform(rng));
      for (double c : g.matrix().col_sums()) CHECK(std::abs(c - 1.0) < 1e-10);
    }
    CHECK_THROWS_AS(gillis2d(lat, a, b, 1.5), DomainError);
  }
}
