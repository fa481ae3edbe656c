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

#include "qwalk/qrw/qrw.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/numkit/linalg.hpp"

namespace qwalk {
namespace {

constexpr double kShiftUnitarityTolerance = 1e-9;

std::string fmt(double x) { return std::to_string(x); }

// P+ U and P- U: the rows of U kept one at a time.
std::array<ComplexMatrix, 2> projected_coin(const ComplexMatrix& u) {
  ComplexMatrix plus(2, 2), minus(2, 2);
  plus(0, 0) = u(0, 0);
  plus(0, 1) = u(0, 1);
  minus(1, 0) = u(1, 0);
  minus(1, 1) = u(1, 1);
  return {plus, minus};
}

void require_walker_dim(const DensityMatrix& rho, const WalkLattice& lat) {
  if (rho.dim() != lat.size()) {
    throw DimensionMismatch("walker state has dimension " +
                            std::to_string(rho.dim()) + ", lattice has " +
                            std::to_string(lat.size()) + " sites");
  }
}

ComplexMatrix kraus_sum(const std::vector<ComplexMatrix>& ops,
                        const ComplexMatrix& rho) {
  ComplexMatrix out(rho.rows(), rho.cols());
  for (const auto& k : ops) out += sandwich(k, rho);
  return hermitian_part(out);
}

// psi ⊗ I_d as a (2d x d) matrix; V^N times this holds the Kraus blocks of
// V^N stacked by coin index.
ComplexMatrix coin_embedding(const CoinState& psi, std::size_t d) {
  ComplexMatrix x(2 * d, d);
  for (std::size_t c = 0; c < 2; ++c) {
    for (std::size_t w = 0; w < d; ++w) x(c * d + w, w) = psi[c];
  }
  return x;
}

std::vector<ComplexMatrix> stacked_blocks(const ComplexMatrix& x,
                                          std::size_t d) {
  return {x.block(0, 0, d, d), x.block(d, 0, d, d)};
}

}  // namespace

// ---------------------------------------------------------------- coins

CoinSpec::CoinSpec(ComplexMatrix u, cplx a, cplx b)
    : u_(std::move(u)), psi_{a, b} {
  if (u_.rows() != 2 || u_.cols() != 2) {
    throw DimensionMismatch("CoinSpec: coin must be 2x2");
  }
  const double defect = unitarity_defect(u_);
  if (defect > 1e-12) {
    throw NonUnitaryInput("CoinSpec: coin unitarity defect " + fmt(defect));
  }
  const double norm2 = std::norm(a) + std::norm(b);
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw DomainError("CoinSpec: |a|^2 + |b|^2 = " + fmt(norm2));
  }
}

ComplexMatrix hadamard() {
  const double s = std::numbers::sqrt2 / 2.0;
  return ComplexMatrix{{s, s}, {s, -s}};
}

CoinSpec CoinSpec::symmetric_hadamard() {
  const double s = std::numbers::sqrt2 / 2.0;
  return CoinSpec(hadamard(), s, cplx(0.0, s));
}

CoinSpec CoinSpec::from_probabilities(double p_plus, cplx a, cplx b) {
  if (!(p_plus >= 0.0 && p_plus <= 1.0)) {
    throw DomainError("CoinSpec: p = " + fmt(p_plus) + " outside [0, 1]");
  }
  const double sp = std::sqrt(p_plus);
  const double sm = std::sqrt(1.0 - p_plus);
  return CoinSpec(ComplexMatrix{{sp, sm}, {sm, -sp}}, a, b);
}

ComplexMatrix CoinSpec::rho() const { return ComplexMatrix::outer(psi_, psi_); }

CoinProbabilities coin_probabilities(const CoinSpec& coin) {
  const auto rotated =
      qwalk::apply(coin.u(), std::span<const cplx>(coin.psi()));
  return {std::norm(rotated[0]), std::norm(rotated[1])};
}

// ---------------------------------------------------------------- Kraus

KrausSet::KrausSet(std::vector<ComplexMatrix> ops, double tol)
    : ops_(std::move(ops)) {
  if (ops_.empty()) throw DimensionMismatch("KrausSet: no operators");
  const std::size_t d = ops_.front().rows();
  ComplexMatrix sum(d, d);
  for (const auto& k : ops_) {
    if (k.rows() != d || k.cols() != d) {
      throw DimensionMismatch("KrausSet: operators must be equal and square");
    }
    sum += multiply(k.adjoint(), k);
  }
  defect_ = max_abs_diff(sum, ComplexMatrix::identity(d));
  if (defect_ > tol) {
    throw NonUnitaryInput("KrausSet: completeness defect " + fmt(defect_));
  }
}

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::kCRW:
      return "crw";
    case Scheme::kQRW1:
      return "qrw1";
    case Scheme::kQRW2:
      return "qrw2";
  }
  return "crw";
}

std::optional<Scheme> scheme_from_string(std::string_view s) {
  if (s == "crw") return Scheme::kCRW;
  if (s == "qrw1") return Scheme::kQRW1;
  if (s == "qrw2") return Scheme::kQRW2;
  return std::nullopt;
}

ComplexMatrix build_step_unitary(const CoinSpec& coin,
                                 const ComplexMatrix& s_plus,
                                 const ComplexMatrix& s_minus) {
  if (!s_plus.is_square() || s_plus.rows() != s_minus.rows() ||
      !s_minus.is_square()) {
    throw DimensionMismatch("build_step_unitary: shift shapes differ");
  }
  for (const auto* s : {&s_plus, &s_minus}) {
    const double defect = unitarity_defect(*s);
    if (defect > kShiftUnitarityTolerance) {
      throw NonUnitaryInput("build_step_unitary: shift unitarity defect " +
                            fmt(defect));
    }
  }
  const auto [pu_plus, pu_minus] = projected_coin(coin.u());
  ComplexMatrix v = kron(pu_plus, s_plus);
  v += kron(pu_minus, s_minus);
  return v;
}

ComplexMatrix build_step_unitary(const CoinSpec& coin, const WalkLattice& lat) {
  const auto ops = shift_operators(lat);
  return build_step_unitary(coin, ops.e_plus, ops.e_minus);
}

KrausSet kraus_from_unitary(const ComplexMatrix& v, const CoinState& psi) {
  if (!v.is_square() || v.rows() % 2 != 0 || v.rows() == 0) {
    throw DimensionMismatch("kraus_from_unitary: V must be 2d x 2d");
  }
  const double defect = unitarity_defect(v);
  if (defect > kShiftUnitarityTolerance) {
    throw NonUnitaryInput("kraus_from_unitary: unitarity defect " + fmt(defect));
  }
  const std::size_t d = v.rows() / 2;
  const ComplexMatrix x = multiply(v, coin_embedding(psi, d));
  return KrausSet(stacked_blocks(x, d));
}

DensityMatrix cptp_apply(const KrausSet& k, const DensityMatrix& rho) {
  if (k.dim() != rho.dim()) {
    throw DimensionMismatch("cptp_apply: Kraus dimension " +
                            std::to_string(k.dim()) + " vs state dimension " +
                            std::to_string(rho.dim()));
  }
  return DensityMatrix(kraus_sum(k.ops(), rho.matrix()));
}

DensityMatrix coin_trace_channel(const ComplexMatrix& v,
                                 const ComplexMatrix& rho_c,
                                 const DensityMatrix& rho_w) {
  const std::size_t dc = rho_c.rows();
  const std::size_t dw = rho_w.dim();
  if (!rho_c.is_square() || v.rows() != dc * dw || !v.is_square()) {
    throw DimensionMismatch("coin_trace_channel: shapes do not compose");
  }
  const ComplexMatrix joint = sandwich(v, kron(rho_c, rho_w.matrix()));
  return DensityMatrix(hermitian_part(partial_trace_first(joint, dc, dw)));
}

// ------------------------------------------------------------ evolution

std::vector<WalkState> evolve_series(Scheme scheme, const CoinSpec& coin,
                                     const WalkLattice& lat,
                                     const DensityMatrix& rho0, std::size_t n) {
  require_walker_dim(rho0, lat);
  const ComplexMatrix v = build_step_unitary(coin, lat);
  std::vector<WalkState> out;
  out.reserve(n + 1);
  out.push_back({rho0, 0, scheme});

  switch (scheme) {
    case Scheme::kCRW:
    case Scheme::kQRW2: {
      const KrausSet k = kraus_from_unitary(
          scheme == Scheme::kCRW ? v : multiply(v, v), coin.psi());
      for (std::size_t s = 1; s <= n; ++s) {
        out.push_back({cptp_apply(k, out.back().rho_w), s, scheme});
      }
      break;
    }
    case Scheme::kQRW1: {
      const std::size_t d = lat.size();
      ComplexMatrix x = coin_embedding(coin.psi(), d);
      for (std::size_t s = 1; s <= n; ++s) {
        x = multiply(v, x);
        out.push_back(
            {DensityMatrix(kraus_sum(stacked_blocks(x, d), rho0.matrix())), s,
             scheme});
      }
      break;
    }
  }
  return out;
}

WalkState evolve(Scheme scheme, const CoinSpec& coin, const WalkLattice& lat,
                 const DensityMatrix& rho0, std::size_t n) {
  if (scheme != Scheme::kQRW1) {
    require_walker_dim(rho0, lat);
    const ComplexMatrix v = build_step_unitary(coin, lat);
    const KrausSet k = kraus_from_unitary(
        scheme == Scheme::kCRW ? v : multiply(v, v), coin.psi());
    DensityMatrix rho = rho0;
    for (std::size_t s = 0; s < n; ++s) rho = cptp_apply(k, rho);
    return {rho, n, scheme};
  }
  require_walker_dim(rho0, lat);
  if (n == 0) return {rho0, 0, scheme};
  const std::size_t d = lat.size();
  const ComplexMatrix v = build_step_unitary(coin, lat);
  ComplexMatrix x = coin_embedding(coin.psi(), d);
  for (std::size_t s = 0; s < n; ++s) x = multiply(v, x);
  return {DensityMatrix(kraus_sum(stacked_blocks(x, d), rho0.matrix())), n,
          scheme};
}

ProbVec position_pd(const DensityMatrix& rho) {
  std::vector<double> p(rho.dim());
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = std::max(0.0, rho.matrix()(i, i).real());
  }
  return ProbVec(std::move(p));
}

ProbVec position_pd(const WalkState& state) { return position_pd(state.rho_w); }

double distance_moment(const DensityMatrix& rho, const ComplexMatrix& l,
                       unsigned m) {
  if (l.rows() != rho.dim() || !l.is_square()) {
    throw DimensionMismatch("distance_moment: operator shape");
  }
  const ComplexMatrix lm = matrix_power(l, m);
  const ComplexMatrix& r = rho.matrix();
  cplx tr = 0.0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t k = 0; k < r.cols(); ++k) {
      if (lm(i, k) != cplx(0.0)) tr += lm(i, k) * r(k, i);
    }
  }
  if (std::abs(tr.imag()) > 1e-10) {
    throw InvalidState("distance_moment: imaginary residue " + fmt(tr.imag()));
  }
  return tr.real();
}

double sigma(const DensityMatrix& rho, const WalkLattice& lat) {
  const ComplexMatrix l = shift_operators(lat).distance;
  const double m1 = distance_moment(rho, l, 1);
  const double m2 = distance_moment(rho, l, 2);
  return std::sqrt(std::max(0.0, m2 - m1 * m1));
}

// --------------------------------------------------------- QRW2 matrix

StochMatrix delta_q_matrix(const CoinSpec& coin, const WalkLattice& lat) {
  const ComplexMatrix v = build_step_unitary(coin, lat);
  const KrausSet b = kraus_from_unitary(multiply(v, v), coin.psi());
  ComplexMatrix sum(lat.size(), lat.size());
  for (const auto& op : b.ops()) sum += hadamard_product_conj(op, op);
  return StochMatrix(RealMatrix::from_complex(sum), StochKind::kBistochastic);
}

DeltaQComparison delta_q_comparison(double p, cplx a, cplx b) {
  const CoinSpec coin = CoinSpec::from_probabilities(p, a, b);
  const WalkLattice lat(7, Boundary::kCyclic);
  const StochMatrix dq = delta_q_matrix(coin, lat);
  const std::size_t o = lat.origin();

  DeltaQComparison out;
  out.computed = {dq(o + 2, o), dq(o - 2, o), dq(o, o)};
  const double s = std::sqrt(p * (1.0 - p));
  const double plus2 = std::norm(p * a + s * b);
  const double minus2 = std::norm(s * a - p * b);
  const double first = std::norm((1.0 - p) * a - s * b);
  const cplx second = (1.0 - p) * b + s * a;
  out.closed_form_typeset = {plus2, minus2, first + std::abs(second)};
  out.closed_form_squared = {plus2, minus2, first + std::norm(second)};
  return out;
}

Qrw1RecursionReport qrw1_recursion_report(const CoinSpec& coin,
                                          const WalkLattice& lat,
                                          std::size_t n) {
  const std::size_t d = lat.size();
  const double p = coin_probabilities(coin).plus;
  const double s = std::sqrt(p * (1.0 - p));
  const ComplexMatrix v = build_step_unitary(coin, lat);
  const KrausSet k1 = kraus_from_unitary(v, coin.psi());

  ComplexMatrix dc(d, d);
  for (const auto& op : k1.ops()) dc += hadamard_product_conj(op, op);
  const auto shifts = shift_operators(lat);
  const ComplexMatrix e_diff = shifts.e_plus - shifts.e_minus;

  const DensityMatrix rho0 = DensityMatrix::basis_state(d, lat.origin());
  const auto series = evolve_series(Scheme::kQRW1, coin, lat, rho0, n);
  std::vector<cplx> p0(d);
  for (std::size_t i = 0; i < d; ++i) p0[i] = position_pd(rho0)[i];

  Qrw1RecursionReport rep;
  ComplexMatrix x = coin_embedding(coin.psi(), d);
  for (std::size_t step = 0; step < n; ++step) {
    if (step > 0) x = multiply(v, x);
    const auto blocks = stacked_blocks(x, d);
    ComplexMatrix m = hadamard_product_conj(blocks[0], blocks[1]);
    m *= cplx(s);
    m += hadamard_product_conj(blocks[1], blocks[0]);
    m.add_scaled(2.0 * p - 1.0, hadamard_product_conj(blocks[0], blocks[0]));

    const ProbVec cur = position_pd(series[step]);
    std::vector<cplx> pc(cur.entries().begin(), cur.entries().end());
    auto predicted = qwalk::apply(dc, pc);
    const auto memory = qwalk::apply(e_diff, qwalk::apply(m, p0));
    const ProbVec next = position_pd(series[step + 1]);
    double dev = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      dev = std::max(dev, std::abs((predicted[i] + memory[i]).real() - next[i]));
    }
    rep.deviations.push_back(dev);
    rep.max_deviation = std::max(rep.max_deviation, dev);
  }
  return rep;
}

// ------------------------------------------------------ unitarization

Unitarization unitarize_k(const CoinSpec& coin, const ComplexMatrix& s_plus,
                          const ComplexMatrix& s_minus, unsigned k,
                          std::size_t cap) {
  if (k == 0) throw DomainError("unitarize_k: k must be >= 1");
  const std::size_t d = s_plus.rows();
  if (k >= 8 * sizeof(std::size_t) - 1 || (std::size_t{1} << k) * d > cap) {
    throw DimensionBudget("unitarize_k: 2^" + std::to_string(k) + " * " +
                          std::to_string(d) + " exceeds the cap " +
                          std::to_string(cap));
  }
  // Validates the shifts.
  (void)build_step_unitary(coin, s_plus, s_minus);
  const auto pu = projected_coin(coin.u());
  const std::array<const ComplexMatrix*, 2> shifts{&s_plus, &s_minus};
  const std::size_t coins = std::size_t{1} << k;

  Unitarization out;
  out.v_k = ComplexMatrix(coins * d, coins * d);
  for (std::size_t signs = 0; signs < coins; ++signs) {
    ComplexMatrix coin_part = ComplexMatrix::identity(1);
    ComplexMatrix walker = ComplexMatrix::identity(d);
    for (unsigned i = 0; i < k; ++i) {
      const std::size_t m = (signs >> (k - 1 - i)) & 1U;
      coin_part = kron(coin_part, pu[m]);
      walker = multiply(walker, *shifts[m]);
    }
    out.v_k += kron(coin_part, walker);
  }

  for (unsigned i = 0; i < k; ++i) {
    const ComplexMatrix before = ComplexMatrix::identity(std::size_t{1} << i);
    const ComplexMatrix after =
        ComplexMatrix::identity(std::size_t{1} << (k - 1 - i));
    ComplexMatrix w(coins * d, coins * d);
    for (std::size_t m = 0; m < 2; ++m) {
      w += kron(kron(kron(before, pu[m]), after), *shifts[m]);
    }
    out.w_chain.push_back(std::move(w));
  }
  return out;
}

DensityMatrix k_coin_channel(const Unitarization& u, const CoinSpec& coin,
                             const DensityMatrix& rho_w) {
  ComplexMatrix rho_c = ComplexMatrix::identity(1);
  const std::size_t coins = u.w_chain.size();
  for (std::size_t i = 0; i < coins; ++i) rho_c = kron(rho_c, coin.rho());
  return coin_trace_channel(u.v_k, rho_c, rho_w);
}

// ------------------------------------------------------------- Fourier

ComplexMatrix dft_matrix(std::size_t m) {
  ComplexMatrix f(m, m);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      const double angle = -2.0 * std::numbers::pi *
                           static_cast<double>((j * k) % m) /
                           static_cast<double>(m);
      f(j, k) = std::polar(scale, angle);
    }
  }
  return f;
}

FourierWalk fourier_conjugate_walk(const WalkLattice& lat) {
  if (!lat.cyclic()) {
    throw DomainError("fourier_conjugate_walk: lattice must be cyclic");
  }
  const auto shifts = shift_operators(lat);
  ComplexMatrix f = dft_matrix(lat.size());
  const ComplexMatrix fa = f.adjoint();
  ComplexMatrix gp = multiply(multiply(f, shifts.e_plus), fa);
  ComplexMatrix gm = multiply(multiply(f, shifts.e_minus), fa);
  return {std::move(gp), std::move(gm), std::move(f)};
}

}  // namespace qwalk
