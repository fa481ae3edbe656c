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
#include <numbers>

#include "doctest.h"
#include "qwalk/error.hpp"
#include "qwalk/majorization/majorization.hpp"
#include "qwalk/numkit/linalg.hpp"
#include "qwalk/qrw/qrw.hpp"
#include "support.hpp"

using namespace qwalk;
using qwalk::testing::Rng;

namespace {

CoinSpec random_coin(Rng& rng) {
  const auto psi = testing::random_unit_vector(2, rng);
  return CoinSpec(testing::random_unitary2(rng), psi[0], psi[1]);
}

DensityMatrix origin_state(const WalkLattice& lat) {
  return DensityMatrix::basis_state(lat.size(), lat.origin());
}

}  // namespace

TEST_SUITE("qrw") {
  TEST_CASE("coin validation and probabilities") {
    CHECK_THROWS_AS(CoinSpec(ComplexMatrix{{1, 1}, {0, 1}}, 1.0, 0.0), NonUnitaryInput);
    CHECK_THROWS_AS(CoinSpec(hadamard(), 1.0, 1.0), DomainError);
    Rng rng(41);
    for (int t = 0; t < 30; ++t) {
      const auto p = coin_probabilities(random_coin(rng));
      CHECK(std::abs(p.plus + p.minus - 1.0) < 1e-12);
      CHECK(p.plus >= -1e-14);
      CHECK(p.minus >= -1e-14);
    }
    const auto s = coin_probabilities(CoinSpec::symmetric_hadamard());
    CHECK(s.plus == doctest::Approx(0.5));
    // a = b = 1/sqrt 2 stays a valid distribution.
    const double r = 1.0 / std::sqrt(2.0);
    const auto q = coin_probabilities(CoinSpec(hadamard(), r, r));
    CHECK(q.plus == doctest::Approx(1.0));
    CHECK(q.minus == doctest::Approx(0.0));
  }

  TEST_CASE("step unitary") {
    const auto i2 = ComplexMatrix::identity(2);
    const auto i3 = ComplexMatrix::identity(3);
    CHECK(max_abs_diff(build_step_unitary(CoinSpec(i2, 1.0, 0.0), i3, i3),
                       ComplexMatrix::identity(6)) == 0.0);

    const WalkLattice lat(5);
    const auto sh = shift_operators(lat);
    const auto v = build_step_unitary(CoinSpec::symmetric_hadamard(), lat);
    const double h = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        CHECK(std::abs(v(i, j) - h * sh.e_plus(i, j)) < 1e-15);
        CHECK(std::abs(v(i, 5 + j) - h * sh.e_plus(i, j)) < 1e-15);
        CHECK(std::abs(v(5 + i, j) - h * sh.e_minus(i, j)) < 1e-15);
        CHECK(std::abs(v(5 + i, 5 + j) + h * sh.e_minus(i, j)) < 1e-15);
      }

    Rng rng(42);
    for (int t = 0; t < 50; ++t) {
      CHECK(unitarity_defect(build_step_unitary(random_coin(rng), lat)) < 1e-11);
    }
    auto bad = sh.e_plus;
    bad(0, 0) = 0.5;
    CHECK_THROWS_AS(build_step_unitary(CoinSpec::symmetric_hadamard(), bad, sh.e_minus),
                    NonUnitaryInput);
    CHECK_THROWS_AS(build_step_unitary(CoinSpec::symmetric_hadamard(),
                                       WalkLattice(5, Boundary::kTruncated)),
                    NonUnitaryInput);
  }

  TEST_CASE("Kraus operators from the step unitary") {
    const WalkLattice lat(7);
    const auto sh = shift_operators(lat);
    const double p = 0.3;
    const auto k = kraus_from_unitary(build_step_unitary(CoinSpec::from_probabilities(p), lat),
                                      {1.0, 0.0});
    ComplexMatrix kp = sh.e_plus, km = sh.e_minus;
    kp *= cplx(std::sqrt(p));
    km *= cplx(std::sqrt(1 - p));
    CHECK(max_abs_diff(k.ops()[0], kp) < 1e-15);
    CHECK(max_abs_diff(k.ops()[1], km) < 1e-15);

    const auto coin = CoinSpec::symmetric_hadamard();
    const auto hk = kraus_from_unitary(build_step_unitary(coin, lat), coin.psi());
    for (const auto& op : hk.ops()) {
      CHECK(multiply(op.adjoint(), op).trace().real() / 7.0 == doctest::Approx(0.5));
    }

    Rng rng(43);
    for (int t = 0; t < 20; ++t) {
      const auto c = random_coin(rng);
      CHECK(kraus_from_unitary(build_step_unitary(c, lat), c.psi()).completeness_defect() <
            1e-11);
    }
    CHECK_THROWS_AS(KrausSet({ComplexMatrix::identity(2), ComplexMatrix::identity(2)}),
                    NonUnitaryInput);
  }

  TEST_CASE("Kraus channel equals the partial trace") {
    const WalkLattice lat(5);
    const KrausSet id({ComplexMatrix::identity(5)});
    Rng rng(44);
    const auto rho = DensityMatrix::validated(testing::random_density(5, rng));
    CHECK(max_abs_diff(cptp_apply(id, rho).matrix(), rho.matrix()) < 1e-15);

    const auto half = kraus_from_unitary(
        build_step_unitary(CoinSpec::from_probabilities(0.5), lat), {1.0, 0.0});
    const auto out = position_pd(cptp_apply(half, origin_state(lat)));
    CHECK(out[1] == doctest::Approx(0.5));
    CHECK(out[3] == doctest::Approx(0.5));

    for (int t = 0; t < 20; ++t) {
      const auto coin = random_coin(rng);
      const auto v = build_step_unitary(coin, lat);
      const auto r = DensityMatrix::validated(testing::random_density(5, rng));
      const auto a = cptp_apply(kraus_from_unitary(v, coin.psi()), r);
      const auto b = coin_trace_channel(v, coin.rho(), r);
      CHECK(max_abs_diff(a.matrix(), b.matrix()) < 1e-12);
      CHECK(std::abs(a.matrix().trace().real() - 1.0) < 1e-12);
      CHECK(hermitian_defect(a.matrix()) == 0.0);
    }
  }

  TEST_CASE("scheme examples") {
    const WalkLattice lat(9);
    const auto coin = CoinSpec::symmetric_hadamard();
    const auto rho0 = origin_state(lat);
    const auto crw2 = position_pd(evolve(Scheme::kCRW, coin, lat, rho0, 2));
    const std::size_t o = lat.origin();
    CHECK(crw2[o - 2] == doctest::Approx(0.25));
    CHECK(crw2[o] == doctest::Approx(0.5));
    CHECK(crw2[o + 2] == doctest::Approx(0.25));

    const auto q0 = evolve(Scheme::kQRW1, coin, lat, rho0, 0);
    CHECK(max_abs_diff(q0.rho_w.matrix(), rho0.matrix()) == 0.0);
    CHECK(q0.step_count == 0);

    for (std::size_t n = 1; n <= 3; ++n) {
      const auto c = position_pd(evolve(Scheme::kCRW, coin, lat, rho0, n));
      const auto q = position_pd(evolve(Scheme::kQRW1, coin, lat, rho0, n));
      CHECK(max_abs_diff(c.entries(), q.entries()) < 1e-12);
    }
    // One QRW2 application covers two steps of the walk.
    const auto two = position_pd(evolve(Scheme::kQRW2, coin, lat, rho0, 1));
    CHECK(max_abs_diff(two.entries(), crw2.entries()) < 1e-12);

    CHECK(position_pd(rho0) == ProbVec::point_mass(9, o));
    CHECK(max_abs_diff(position_pd(DensityMatrix::maximally_mixed(9)).entries(),
                       ProbVec::uniform(9).entries()) < 1e-15);
    CHECK(scheme_from_string("qrw2") == Scheme::kQRW2);
    CHECK_FALSE(scheme_from_string("qrw3").has_value());
  }

  TEST_CASE("moments of the symmetric configuration") {
    const WalkLattice lat(45);
    const auto coin = CoinSpec::symmetric_hadamard();
    const auto l = shift_operators(lat).distance;
    const auto rho0 = origin_state(lat);
    for (unsigned m = 1; m <= 4; ++m) CHECK(distance_moment(rho0, l, m) == 0.0);
    for (Scheme s : {Scheme::kCRW, Scheme::kQRW1, Scheme::kQRW2}) {
      const auto series = evolve_series(s, coin, lat, rho0, 10);
      CHECK(series.size() == 11);
      for (const auto& st : series) CHECK(std::abs(distance_moment(st.rho_w, l, 1)) < 1e-10);
      if (s == Scheme::kCRW) {
        for (std::size_t n = 0; n <= 10; ++n) {
          CHECK(std::abs(sigma(series[n].rho_w, lat) - std::sqrt(double(n))) < 1e-10);
        }
      }
      if (s == Scheme::kQRW2) {
        CHECK(std::abs(sigma(series[5].rho_w, lat) - 2.0 * std::sqrt(5.0)) < 1e-10);
      }
    }
  }

  TEST_CASE("QRW1 spreads faster than the classical walk") {
    const WalkLattice lat(125);
    const auto series = evolve_series(Scheme::kQRW1, CoinSpec::symmetric_hadamard(), lat,
                                      origin_state(lat), 60);
    double prev = 0.0;
    for (std::size_t n = 4; n <= 60; ++n) {
      const double ratio = sigma(series[n].rho_w, lat) / std::sqrt(double(n));
      CHECK(ratio >= prev - 1e-12);
      prev = ratio;
      if (n == 20) CHECK(ratio > 1.3);
    }
  }

  TEST_CASE("QRW2 breaks the majorization order") {
    const WalkLattice lat(85);
    const auto series = evolve_series(Scheme::kQRW2, CoinSpec::symmetric_hadamard(), lat,
                                      origin_state(lat), 20);
    bool found = false;
    for (std::size_t n = 1; n <= 20; ++n) {
      const auto v = majorizes(position_pd(series[n - 1]), position_pd(series[n]));
      found = found || v.relation == MajorizationRelation::kIncomparable;
    }
    CHECK(found);
  }

  TEST_CASE("QRW2 one-step matrix") {
    const WalkLattice lat(9);
    Rng rng(45);
    for (int t = 0; t < 10; ++t) {
      CHECK(is_bistochastic(delta_q_matrix(random_coin(rng), lat), 1e-10));
    }
    const auto c = delta_q_comparison(0.5, 1.0, 0.0);
    CHECK(c.computed.plus2 == doctest::Approx(0.25));
    CHECK(c.closed_form_squared.plus2 == doctest::Approx(0.25));
    CHECK(c.computed.plus2 + c.computed.minus2 + c.computed.identity ==
          doctest::Approx(1.0));
    // The first QRW2 step is reproduced by the matrix from a point mass.
    const auto coin = CoinSpec::symmetric_hadamard();
    const auto rho0 = origin_state(lat);
    const auto p1 = step(delta_q_matrix(coin, lat), position_pd(rho0));
    CHECK(max_abs_diff(p1.entries(),
                       position_pd(evolve(Scheme::kQRW2, coin, lat, rho0, 1)).entries()) <
          1e-12);
  }

  TEST_CASE("k-coin unitarization") {
    const WalkLattice lat(5);
    const auto sh = shift_operators(lat);
    Rng rng(46);
    const auto coin = random_coin(rng);
    const auto u1 = unitarize_k(coin, sh.e_plus, sh.e_minus, 1);
    CHECK(max_abs_diff(u1.v_k, build_step_unitary(coin, lat)) < 1e-15);
    const auto rho = DensityMatrix::validated(testing::random_density(5, rng));
    for (unsigned k = 2; k <= 3; ++k) {
      const auto u = unitarize_k(coin, sh.e_plus, sh.e_minus, k);
      CHECK(u.w_chain.size() == k);
      ComplexMatrix prod = ComplexMatrix::identity(u.v_k.rows());
      for (const auto& w : u.w_chain) {
        CHECK(unitarity_defect(w) < 1e-11);
        prod = multiply(prod, w);
      }
      CHECK(max_abs_diff(prod, u.v_k) < 1e-12);
      CHECK(unitarity_defect(u.v_k) < 1e-11);
      const auto direct = evolve(Scheme::kCRW, coin, lat, rho, k).rho_w;
      CHECK(max_abs_diff(k_coin_channel(u, coin, rho).matrix(), direct.matrix()) < 1e-11);
    }
    CHECK_THROWS_AS(unitarize_k(coin, sh.e_plus, sh.e_minus, 9), DimensionBudget);
  }

  TEST_CASE("Fourier conjugate walk") {
    const std::size_t m = 6;
    const auto fw = fourier_conjugate_walk(WalkLattice(m));
    CHECK(unitarity_defect(fw.dft) < 1e-14);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const cplx want = i == j ? std::polar(1.0, -2 * std::numbers::pi * double(i) / m)
                                 : cplx(0.0);
        CHECK(std::abs(fw.g_plus(i, j) - want) < 1e-14);
      }
    const auto f4 = fourier_conjugate_walk(WalkLattice(4));
    CHECK(max_abs_diff(matrix_power(f4.g_plus, 4), ComplexMatrix::identity(4)) < 1e-14);
    CHECK_THROWS_AS(fourier_conjugate_walk(WalkLattice(4, Boundary::kTruncated)),
                    DomainError);
  }

  TEST_CASE("local unitary on the coin leaves the channel unchanged") {
    const WalkLattice lat(7);
    Rng rng(47);
    for (int t = 0; t < 10; ++t) {
      const auto coin = random_coin(rng);
      const auto v = build_step_unitary(coin, lat);
      const auto w = kron(testing::random_unitary2(rng), ComplexMatrix::identity(7));
      const auto rho = DensityMatrix::validated(testing::random_density(7, rng));
      CHECK(max_abs_diff(coin_trace_channel(v, coin.rho(), rho).matrix(),
                         coin_trace_channel(multiply(w, v), coin.rho(), rho).matrix()) <
            1e-12);
    }
  }

  TEST_CASE("trace drift over long runs") {
    const WalkLattice lat(64);
    const auto coin = CoinSpec::symmetric_hadamard();
    for (Scheme s : {Scheme::kCRW, Scheme::kQRW1, Scheme::kQRW2}) {
      const auto series = evolve_series(s, coin, lat, origin_state(lat), 30);
      for (const auto& st : series) {
        CHECK(std::abs(st.rho_w.matrix().trace().real() - 1.0) < 1e-11);
      }
    }
  }

  TEST_CASE("QRW1 recursion report runs") {
    const WalkLattice lat(21);
    const auto r = qrw1_recursion_report(CoinSpec::symmetric_hadamard(), lat, 5);
    CHECK(r.deviations.size() == 5);
    CHECK(std::isfinite(r.max_deviation));
  }
}
