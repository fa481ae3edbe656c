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

#include "doctest.h"
#include "qwalk/error.hpp"
#include "qwalk/numkit/linalg.hpp"
#include "qwalk/zn/zn_factor.hpp"
#include "support.hpp"

using namespace qwalk;
using qwalk::testing::Rng;

namespace {

// Builds the pd on Z_n whose tensor image is p1 ⊗ p2 (⊗ p3).
ProbVec compose(const CrtSplit& split, const std::vector<ProbVec>& parts) {
  std::vector<double> p(split.n());
  for (std::size_t x = 0; x < split.n(); ++x) {
    double w = 1.0;
    const auto& r = split.residues(x);
    for (std::size_t k = 0; k < parts.size(); ++k) w *= parts[k][r[k]];
    p[x] = w;
  }
  return ProbVec(std::move(p));
}

}  // namespace

TEST_SUITE("zn-factor") {
  TEST_CASE("split validation") {
    CHECK_NOTHROW(CrtSplit({3, 2}));
    CHECK_THROWS_AS(CrtSplit({4, 2}), DomainError);
    CHECK_THROWS_AS(CrtSplit({6}), DomainError);
    CHECK_THROWS_AS(CrtSplit({1, 5}), DomainError);
  }

  TEST_CASE("remainder map examples") {
    const CrtSplit s6({3, 2});
    CHECK(crt_delta(s6, 5) == Residues{2, 1});
    const CrtSplit s60({3, 4, 5});
    CHECK(crt_delta(s60, 59) == Residues{2, 3, 4});
    const CrtSplit s15({3, 5});
    CHECK(crt_mu(s15, {1, 2}) == 7);
    CHECK(crt_mu(s15, {2, 4}) == 14);
    CHECK_THROWS_AS(crt_delta(s6, 6), DomainError);
    CHECK_THROWS_AS(crt_mu(s6, {3, 0}), DomainError);
  }

  TEST_CASE("delta and mu are mutually inverse") {
    for (const auto& f : std::vector<std::vector<std::size_t>>{
             {3, 2}, {2, 3}, {3, 5}, {4, 9}, {3, 4, 5}, {2, 3, 5, 7}}) {
      const CrtSplit s(f);
      for (std::size_t x = 0; x < s.n(); ++x) CHECK(crt_mu(s, crt_delta(s, x)) == x);
    }
  }

  TEST_CASE("V_delta is a permutation into the tensor basis") {
    const CrtSplit s({3, 2});
    const auto v = v_delta(s);
    // e_5 -> e_2 ⊗ e_1 = index 2*2 + 1.
    CHECK(v(5, 5) == cplx(1.0));
    CHECK(unitarity_defect(v) == 0.0);
    Rng rng(31);
    const auto p = testing::random_pd(6, rng);
    const auto direct = permute_to_tensor(s, p.entries());
    std::vector<cplx> pc(p.entries().begin(), p.entries().end());
    const auto via = qwalk::apply(v, pc);
    for (std::size_t i = 0; i < 6; ++i) CHECK(via[i].real() == direct[i]);
  }

  TEST_CASE("factorize examples") {
    const CrtSplit s({3, 2});
    CHECK_FALSE(factorize_pd(ProbVec({0.5, 0.5, 0, 0, 0, 0}), s).has_value());
    const auto u = factorize_pd(ProbVec::uniform(6), s);
    REQUIRE(u.has_value());
    CHECK(max_abs_diff(u->first.entries(), ProbVec::uniform(3).entries()) < 1e-15);
    CHECK(max_abs_diff(u->second.entries(), ProbVec::uniform(2).entries()) < 1e-15);

    Rng rng(32);
    const ProbVec p1 = testing::random_pd(3, rng), p2 = testing::random_pd(2, rng);
    const auto f = factorize_pd(compose(s, {p1, p2}), s);
    REQUIRE(f.has_value());
    CHECK(max_abs_diff(f->first.entries(), p1.entries()) < 1e-14);
    CHECK(max_abs_diff(f->second.entries(), p2.entries()) < 1e-14);
  }

  TEST_CASE("convolution matches the circulant action and commutes") {
    Rng rng(33);
    const auto p = testing::random_pd(7, rng), q = testing::random_pd(7, rng);
    const auto c = cyclic_convolution(p, q);
    CHECK(max_abs_diff(c.entries(), cyclic_convolution(q, p).entries()) < 1e-15);
    CHECK(max_abs_diff(c.entries(), step(circulant(p), q).entries()) < 1e-15);
    CHECK(circulant(p).kind() == StochKind::kBistochastic);
  }

  TEST_CASE("factorization check on random product walks") {
    Rng rng(34);
    for (const auto& f : std::vector<std::vector<std::size_t>>{{3, 2}, {4, 5}, {7, 3}}) {
      const CrtSplit s(f);
      const auto p = compose(s, {testing::random_pd(f[0], rng), testing::random_pd(f[1], rng)});
      const auto r = factorization_check(p, s, 25);
      CHECK(r.step_deviations.size() == 26);
      CHECK(r.conjugation_deviation < 1e-12);
      CHECK(r.max_deviation < 1e-12);
    }
    CHECK_THROWS_AS(factorization_check(ProbVec({0.5, 0.5, 0, 0, 0, 0}), CrtSplit({3, 2}), 3),
                    NotFactorizable);
    CHECK_THROWS_AS(factorization_check(ProbVec::uniform(60), CrtSplit({3, 4, 5}), 3),
                    DomainError);
  }

  TEST_CASE("coassociativity on Z_60") {
    Rng rng(35);
    const CrtSplit s({3, 4, 5});
    const auto p = compose(s, {testing::random_pd(3, rng), testing::random_pd(4, rng),
                               testing::random_pd(5, rng)});
    const auto r = coassoc_check(p, s, 12);
    CHECK(r.composite_deviation == 0.0);
    CHECK(r.max_deviation < 1e-12);
    REQUIRE(r.factors.size() == 3);
    CHECK_THROWS_AS(coassoc_check(p, CrtSplit({12, 5}), 2), DomainError);
  }
}
