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

#include "qwalk/fock/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/error.hpp"
#include "qwalk/numkit/linalg.hpp"

namespace qwalk {
namespace {

constexpr double kOverflowLimit = 1e6;
constexpr double kStabilityLimit = 0.05;

std::string fmt(double x) { return std::to_string(x); }

double top_population(const ComplexMatrix& rho, std::size_t m) {
  const std::size_t top = (m + 9) / 10;
  double pop = 0.0;
  for (std::size_t i = m - top; i < m; ++i) pop += rho(i, i).real();
  return pop;
}

void check_edge(const ComplexMatrix& rho, std::size_t m, const char* where) {
  const double pop = top_population(rho, m);
  if (pop > kTruncationBudget) {
    throw TruncationInadequate(std::string(where) + ": top-level population " +
                               fmt(pop) + " exceeds the truncation budget");
  }
}

void check_amplitude(cplx alpha, const FockSpace& f, const char* where) {
  if (std::norm(alpha) > static_cast<double>(f.m()) / 4.0) {
    throw TruncationInadequate(std::string(where) + ": |alpha|^2 = " +
                               fmt(std::norm(alpha)) + " exceeds m/4 = " +
                               fmt(static_cast<double>(f.m()) / 4.0));
  }
}

double binomial(unsigned n, unsigned k) {
  double b = 1.0;
  for (unsigned i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// rho Y computed as (Y† rho†)† so the sparse ladder factor sits on the left
// of the product.
ComplexMatrix right_multiply(const ComplexMatrix& rho,
                             const ComplexMatrix& y_adj) {
  return multiply(y_adj, rho.adjoint()).adjoint();
}

// Generator sum_t coef_t X_t rho Y_t; an empty factor stands for the
// identity.
class Generator {
 public:
  struct Term {
    cplx coef;
    ComplexMatrix left;
    ComplexMatrix right_adj;
  };

  Generator(const MasterEqParams& p, const FockSpace& f, bool adjoint) {
    const ComplexMatrix& a = f.a();
    const ComplexMatrix& ad = f.a_dag();
    const ComplexMatrix a2 = multiply(a, a);
    const ComplexMatrix ad2 = multiply(ad, ad);
    const ComplexMatrix aad = multiply(a, ad);
    const double g = std::abs(p.gamma);

    ComplexMatrix k = p.c * ad;
    k.add_scaled(-std::conj(p.c), a);

    // One-sided pieces: L rho + rho R.
    ComplexMatrix l = k;
    ComplexMatrix r = -1.0 * k;
    for (auto* side : {&l, &r}) {
      side->add_scaled(p.gamma, ad2);
      side->add_scaled(std::conj(p.gamma), a2);
      side->add_scaled(-g, f.num());
      side->add_scaled(-g, aad);
    }
    add(1.0, l, {}, adjoint);
    add(1.0, {}, r, adjoint);
    if (p.gamma != cplx(0.0)) {
      add(-2.0 * p.gamma, ad, ad, adjoint);
      add(-2.0 * std::conj(p.gamma), a, a, adjoint);
    }
    if (g != 0.0) {
      add(2.0 * g, a, ad, adjoint);
      add(2.0 * g, ad, a, adjoint);
    }
  }

  ComplexMatrix operator()(const ComplexMatrix& rho) const {
    ComplexMatrix out(rho.rows(), rho.cols());
    for (const auto& t : terms_) {
      ComplexMatrix x = t.left.empty() ? rho : multiply(t.left, rho);
      if (!t.right_adj.empty()) x = right_multiply(x, t.right_adj);
      out.add_scaled(t.coef, x);
    }
    return out;
  }

 private:
  // X rho Y; the adjoint generator carries Y f X instead.
  void add(cplx coef, ComplexMatrix x, ComplexMatrix y, bool adjoint) {
    if (adjoint) std::swap(x, y);
    Term t{coef, std::move(x), {}};
    if (!y.empty()) t.right_adj = y.adjoint();
    terms_.push_back(std::move(t));
  }

  std::vector<Term> terms_;
};

void check_stability(const MasterEqParams& p, double t, double dt,
                     const FockSpace& f) {
  if (!(dt > 0.0) || !(t >= 0.0)) {
    throw StabilityBound("master equation: need dt > 0 and t >= 0");
  }
  const double load =
      dt * (std::abs(p.c) + std::abs(p.gamma) * static_cast<double>(f.m()));
  if (load >= kStabilityLimit) {
    throw StabilityBound("master equation: dt (|c| + |gamma| m) = " +
                         fmt(load) + " is not below " + fmt(kStabilityLimit));
  }
}

ComplexMatrix rk4(const Generator& gen, ComplexMatrix x, double t, double dt,
                  bool hermitize) {
  const auto steps = static_cast<std::size_t>(std::ceil(t / dt - 1e-9));
  if (steps == 0) return x;
  const double h = t / static_cast<double>(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    const ComplexMatrix k1 = gen(x);
    ComplexMatrix y = x;
    y.add_scaled(h / 2.0, k1);
    const ComplexMatrix k2 = gen(y);
    y = x;
    y.add_scaled(h / 2.0, k2);
    const ComplexMatrix k3 = gen(y);
    y = x;
    y.add_scaled(h, k3);
    const ComplexMatrix k4 = gen(y);
    x.add_scaled(h / 6.0, k1);
    x.add_scaled(h / 3.0, k2);
    x.add_scaled(h / 3.0, k3);
    x.add_scaled(h / 6.0, k4);
    if (hermitize) x = hermitian_part(x);
    if (!x.all_finite()) throw OverflowGuard("master equation: non-finite state");
  }
  return x;
}

}  // namespace

FockSpace::FockSpace(std::size_t m) : m_(m), a_(m, m) {
  if (m < 2) throw DomainError("FockSpace: truncation must be >= 2");
  for (std::size_t n = 1; n < m; ++n) {
    a_(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  a_dag_ = a_.adjoint();
  num_ = multiply(a_dag_, a_);
}

DensityMatrix FockSpace::vacuum() const {
  return DensityMatrix::basis_state(m_, 0);
}

double FockSpace::top_population(const ComplexMatrix& rho) const {
  return qwalk::top_population(rho, m_);
}

std::vector<cplx> coherent_state(cplx alpha, const FockSpace& f) {
  check_amplitude(alpha, f, "coherent_state");
  std::vector<cplx> psi(f.m());
  cplx c = std::exp(-std::norm(alpha) / 2.0);
  double kept = 0.0;
  for (std::size_t n = 0; n < f.m(); ++n) {
    if (n > 0) c *= alpha / std::sqrt(static_cast<double>(n));
    psi[n] = c;
    kept += std::norm(c);
  }
  const double dropped = 1.0 - kept;
  if (dropped > kTruncationBudget) {
    throw TruncationInadequate("coherent_state: dropped mass " + fmt(dropped));
  }
  const double scale = 1.0 / std::sqrt(kept);
  for (auto& z : psi) z *= scale;
  return psi;
}

ComplexMatrix displacement(cplx alpha, const FockSpace& f) {
  check_amplitude(alpha, f, "displacement");
  ComplexMatrix gen = alpha * f.a_dag();
  gen.add_scaled(-std::conj(alpha), f.a());
  return expm(gen);
}

ComplexMatrix normal_matrix(const NormalPolynomial& poly, const FockSpace& f) {
  ComplexMatrix out(f.m(), f.m());
  for (const auto& t : poly) {
    out.add_scaled(t.coeff, multiply(matrix_power(f.a_dag(), t.m),
                                     matrix_power(f.a(), t.n)));
  }
  return out;
}

ComplexMatrix hw_transition_monomial(unsigned m_exp, unsigned n_exp, double p,
                                     cplx alpha, const FockSpace& f) {
  const ComplexMatrix id = ComplexMatrix::identity(f.m());
  ComplexMatrix out(f.m(), f.m());
  for (int sign : {+1, -1}) {
    const double weight = sign > 0 ? p : 1.0 - p;
    if (weight == 0.0) continue;
    ComplexMatrix up = f.a_dag();
    up.add_scaled(static_cast<double>(sign) * std::conj(alpha), id);
    ComplexMatrix down = f.a();
    down.add_scaled(static_cast<double>(sign) * alpha, id);
    out.add_scaled(weight,
                   multiply(matrix_power(up, m_exp), matrix_power(down, n_exp)));
  }
  if (!out.all_finite() || out.max_abs() > kOverflowLimit) {
    throw OverflowGuard("hw_transition_monomial: entries exceed " +
                        fmt(kOverflowLimit));
  }
  return out;
}

cplx hw_functional(unsigned m_exp, unsigned n_exp, double p, cplx alpha) {
  const cplx ac = std::conj(alpha);
  const cplx plus = std::pow(ac, static_cast<int>(m_exp)) *
                    std::pow(alpha, static_cast<int>(n_exp));
  const cplx minus = std::pow(-ac, static_cast<int>(m_exp)) *
                     std::pow(-alpha, static_cast<int>(n_exp));
  return p * plus + (1.0 - p) * minus;
}

ComplexMatrix hw_transition(const NormalPolynomial& poly, double p, cplx alpha,
                            const FockSpace& f) {
  NormalPolynomial expanded;
  for (const auto& t : poly) {
    for (unsigned j = 0; j <= t.m; ++j) {
      for (unsigned k = 0; k <= t.n; ++k) {
        const cplx w = t.coeff * binomial(t.m, j) * binomial(t.n, k) *
                       hw_functional(t.m - j, t.n - k, p, alpha);
        if (w != cplx(0.0)) expanded.push_back({j, k, w});
      }
    }
  }
  return normal_matrix(expanded, f);
}

AdjointActionReport adjoint_action_check(const NormalPolynomial& poly,
                                         double p, cplx alpha,
                                         const FockSpace& f, std::size_t block) {
  if (block == 0) block = f.m() / 3;
  block = std::min(block, f.m());
  const ComplexMatrix fm = normal_matrix(poly, f);
  const ComplexMatrix d_plus = displacement(alpha, f);
  const ComplexMatrix d_minus = displacement(-alpha, f);

  AdjointActionReport rep;
  rep.block = block;
  rep.adjoint_path = p * sandwich(d_minus, fm);
  rep.adjoint_path.add_scaled(1.0 - p, sandwich(d_plus, fm));
  rep.monomial_path = ComplexMatrix(f.m(), f.m());
  for (const auto& t : poly) {
    rep.monomial_path.add_scaled(t.coeff,
                                 hw_transition_monomial(t.m, t.n, p, alpha, f));
  }
  rep.polynomial_path = hw_transition(poly, p, alpha, f);
  rep.max_deviation = max_abs_diff(rep.adjoint_path.block(0, 0, block, block),
                                   rep.monomial_path.block(0, 0, block, block));
  rep.route_deviation =
      max_abs_diff(rep.monomial_path.block(0, 0, block, block),
                   rep.polynomial_path.block(0, 0, block, block));
  return rep;
}

DisplacementChannel::DisplacementChannel(double p, cplx beta, const FockSpace& f)
    : m_(f.m()),
      p_(p),
      plus_(displacement(beta, f)),
      minus_(displacement(-beta, f)) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("cs_qrw_step: p = " + fmt(p) + " outside [0, 1]");
  }
}

DensityMatrix DisplacementChannel::operator()(const DensityMatrix& rho) const {
  if (rho.dim() != m_) {
    throw DimensionMismatch("cs_qrw_step: state dimension " +
                            std::to_string(rho.dim()) + " vs truncation " +
                            std::to_string(m_));
  }
  check_edge(rho.matrix(), m_, "cs_qrw_step");
  ComplexMatrix out(m_, m_);
  if (p_ != 0.0) out.add_scaled(p_, sandwich(plus_, rho.matrix()));
  if (p_ != 1.0) out.add_scaled(1.0 - p_, sandwich(minus_, rho.matrix()));
  out = hermitian_part(out);
  check_edge(out, m_, "cs_qrw_step");
  return DensityMatrix(std::move(out), {1e-12, 1e-10, -1e-10});
}

DensityMatrix cs_qrw_step(const DensityMatrix& rho, double p, cplx beta,
                          const FockSpace& f) {
  return DisplacementChannel(p, beta, f)(rho);
}

ComplexMatrix master_eq_rhs(const ComplexMatrix& rho,
                            const MasterEqParams& params, const FockSpace& f) {
  if (rho.rows() != f.m() || !rho.is_square()) {
    throw DimensionMismatch("master_eq_rhs: state dimension");
  }
  return Generator(params, f, false)(rho);
}

ComplexMatrix master_eq_adjoint_rhs(const ComplexMatrix& obs,
                                    const MasterEqParams& params,
                                    const FockSpace& f) {
  if (obs.rows() != f.m() || !obs.is_square()) {
    throw DimensionMismatch("master_eq_adjoint_rhs: observable dimension");
  }
  return Generator(params, f, true)(obs);
}

DensityMatrix integrate_master_eq(const DensityMatrix& rho0,
                                  const MasterEqParams& params, double t,
                                  double dt, const FockSpace& f) {
  if (rho0.dim() != f.m()) {
    throw DimensionMismatch("integrate_master_eq: state dimension");
  }
  check_stability(params, t, dt, f);
  const ComplexMatrix out =
      rk4(Generator(params, f, false), rho0.matrix(), t, dt, true);
  check_edge(out, f.m(), "integrate_master_eq");
  return DensityMatrix(out, {1e-12, 1e-9, -1e-10});
}

ComplexMatrix integrate_adjoint(const ComplexMatrix& obs0,
                                const MasterEqParams& params, double t,
                                double dt, const FockSpace& f) {
  if (obs0.rows() != f.m() || !obs0.is_square()) {
    throw DimensionMismatch("integrate_adjoint: observable dimension");
  }
  check_stability(params, t, dt, f);
  return rk4(Generator(params, f, true), obs0, t, dt, false);
}

DiffusionReport diffusion_limit_check(double c, double gamma, double t,
                                      const std::vector<std::size_t>& n_list,
                                      const FockSpace& f, double dt) {
  if (!(gamma > 0.0)) {
    throw ScalingInvalid("diffusion_limit_check: gamma must be positive");
  }
  if (!(t > 0.0)) throw ScalingInvalid("diffusion_limit_check: t must be positive");
  struct Scaled {
    std::size_t n;
    double alpha;
    double p;
  };
  std::vector<Scaled> scaled;
  for (std::size_t n : n_list) {
    if (n == 0) throw ScalingInvalid("diffusion_limit_check: n must be >= 1");
    const double nn = static_cast<double>(n);
    const double alpha = std::sqrt(2.0 * t * gamma / nn);
    const double p = 0.5 + t * c / (2.0 * nn * alpha);
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ScalingInvalid("diffusion_limit_check: n = " + std::to_string(n) +
                           " gives p = " + fmt(p) + " outside [0, 1]");
    }
    scaled.push_back({n, alpha, p});
  }

  const DensityMatrix rho0 = f.vacuum();
  const DensityMatrix reference =
      integrate_master_eq(rho0, {c, gamma}, t, dt, f);

  DiffusionReport rep;
  rep.reference_trace_drift = std::abs(reference.matrix().trace() - 1.0);
  for (const auto& s : scaled) {
    const DisplacementChannel step(s.p, s.alpha, f);
    DensityMatrix rho = rho0;
    for (std::size_t k = 0; k < s.n; ++k) rho = step(rho);
    const double dev =
        trace_norm_hermitian(rho.matrix() - reference.matrix());
    rep.points.push_back({s.n, s.alpha, s.p, dev});
  }
  return rep;
}

}  // namespace qwalk
