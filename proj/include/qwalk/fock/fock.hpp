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

// Walks generated by displacements in a truncated Fock space, and the
// master equation they converge to in the small-step limit.

#include <cstddef>
#include <vector>

#include "qwalk/numkit/complex_matrix.hpp"
#include "qwalk/numkit/density_matrix.hpp"

namespace qwalk {

/// Levels |0> ... |m-1> with a|n> = sqrt(n)|n-1>.
class FockSpace {
 public:
  explicit FockSpace(std::size_t m = 64);

  std::size_t m() const { return m_; }
  const ComplexMatrix& a() const { return a_; }
  const ComplexMatrix& a_dag() const { return a_dag_; }
  /// a† a
  const ComplexMatrix& num() const { return num_; }

  DensityMatrix vacuum() const;
  /// Population held by the top ceil(m/10) levels.
  double top_population(const ComplexMatrix& rho) const;

 private:
  std::size_t m_;
  ComplexMatrix a_;
  ComplexMatrix a_dag_;
  ComplexMatrix num_;
};

/// Population above which a state counts as touching the truncation edge.
inline constexpr double kTruncationBudget = 1e-8;

/// Truncated coherent-state expansion, renormalized. Throws
/// TruncationInadequate when |alpha|^2 > m/4 or the dropped mass exceeds
/// 1e-8.
std::vector<cplx> coherent_state(cplx alpha, const FockSpace& f);

/// exp(alpha a† - conj(alpha) a). Same guard as coherent_state on |alpha|.
ComplexMatrix displacement(cplx alpha, const FockSpace& f);

/// Normally ordered polynomial sum_t coeff_t (a†)^m_t a^n_t.
struct NormalTerm {
  unsigned m;
  unsigned n;
  cplx coeff;
};
using NormalPolynomial = std::vector<NormalTerm>;

ComplexMatrix normal_matrix(const NormalPolynomial& poly, const FockSpace& f);

/// p (a† + conj(alpha))^m (a + alpha)^n + (1-p) (a† - conj(alpha))^m (a - alpha)^n
/// as a product of shifted ladder operators. Throws OverflowGuard when an
/// entry exceeds 1e6.
ComplexMatrix hw_transition_monomial(unsigned m_exp, unsigned n_exp, double p,
                                     cplx alpha, const FockSpace& f);

/// The same operator for a polynomial, through the binomial expansion
/// sum C(m,j) C(n,k) phi(m-j, n-k) (a†)^j a^k.
ComplexMatrix hw_transition(const NormalPolynomial& poly, double p, cplx alpha,
                            const FockSpace& f);

/// p conj(alpha)^m alpha^n + (1-p) (-conj(alpha))^m (-alpha)^n
cplx hw_functional(unsigned m_exp, unsigned n_exp, double p, cplx alpha);

struct AdjointActionReport {
  ComplexMatrix adjoint_path;     // p D(-alpha) f D(-alpha)† + (1-p) D(alpha) f D(alpha)†
  ComplexMatrix monomial_path;    // sum of hw_transition_monomial terms
  ComplexMatrix polynomial_path;  // hw_transition
  std::size_t block = 0;
  /// max |adjoint - monomial| on the leading block x block corner.
  double max_deviation = 0.0;
  /// max |monomial - polynomial| on the same corner.
  double route_deviation = 0.0;
};

/// `block` = 0 picks m / 3.
AdjointActionReport adjoint_action_check(const NormalPolynomial& poly,
                                         double p, cplx alpha,
                                         const FockSpace& f,
                                         std::size_t block = 0);

/// p D(beta) rho D(beta)† + (1-p) D(-beta) rho D(-beta)†. Throws
/// TruncationInadequate when the input or output reaches the top levels.
DensityMatrix cs_qrw_step(const DensityMatrix& rho, double p, cplx beta,
                          const FockSpace& f);

/// The step with precomputed displacements, for repeated application.
class DisplacementChannel {
 public:
  DisplacementChannel(double p, cplx beta, const FockSpace& f);
  DensityMatrix operator()(const DensityMatrix& rho) const;

 private:
  std::size_t m_;
  double p_;
  ComplexMatrix plus_;
  ComplexMatrix minus_;
};

struct MasterEqParams {
  cplx c = 0.0;
  cplx gamma = 0.0;
};

/// drho/dt = [c a† - conj(c) a, rho]
///         + gamma (a†² rho + rho a†² - 2 a† rho a†)
///         + conj(gamma) (a² rho + rho a² - 2 a rho a)
///         - |gamma| (a†a rho + rho a†a - 2 a rho a† + a a† rho + rho a a† - 2 a† rho a)
ComplexMatrix master_eq_rhs(const ComplexMatrix& rho, const MasterEqParams& params,
                            const FockSpace& f);

/// Heisenberg-picture generator: Tr(rho master_eq_rhs(sigma)) =
/// Tr(master_eq_adjoint_rhs(rho) sigma) for all sigma.
ComplexMatrix master_eq_adjoint_rhs(const ComplexMatrix& obs,
                                    const MasterEqParams& params,
                                    const FockSpace& f);

/// Classical RK4 with step dt (shortened uniformly to land on t), the state
/// re-Hermitized after every step. Throws StabilityBound when
/// dt (|c| + |gamma| m) >= 0.05 and TruncationInadequate when the top
/// levels fill.
DensityMatrix integrate_master_eq(const DensityMatrix& rho0,
                                  const MasterEqParams& params, double t,
                                  double dt, const FockSpace& f);

/// Observable evolved to time t by the adjoint generator, same scheme.
ComplexMatrix integrate_adjoint(const ComplexMatrix& obs0,
                                const MasterEqParams& params, double t,
                                double dt, const FockSpace& f);

struct DiffusionPoint {
  std::size_t n;
  double alpha;
  double p;
  double deviation;  // trace norm against the master-equation solution
};

struct DiffusionReport {
  std::vector<DiffusionPoint> points;
  double reference_trace_drift = 0.0;
};

/// For each n runs n walk steps with alpha = sqrt(2 t gamma / n) and
/// p = 1/2 + t c / (2 n alpha) from the vacuum, against the master equation
/// integrated to t with step dt. Throws ScalingInvalid for gamma <= 0 or p
/// outside [0, 1].
DiffusionReport diffusion_limit_check(double c, double gamma, double t,
                                      const std::vector<std::size_t>& n_list,
                                      const FockSpace& f, double dt = 1e-3);

}  // namespace qwalk
