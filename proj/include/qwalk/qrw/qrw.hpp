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

// Coined quantum walks on a cyclic lattice. The joint space is coin ⊗
// walker with the coin index major: basis vector |c> ⊗ |w> sits at row
// c * d + w, c = 0 for "+" and 1 for "-".

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qwalk/numkit/complex_matrix.hpp"
#include "qwalk/numkit/density_matrix.hpp"
#include "qwalk/walks/walks.hpp"

namespace qwalk {

using CoinState = std::array<cplx, 2>;

/// 2x2 unitary coin U and coin state psi = a|+> + b|->.
class CoinSpec {
 public:
  /// Throws NonUnitaryInput if U is not unitary within 1e-12 and
  /// DomainError if |a|^2 + |b|^2 is off 1 by more than 1e-12.
  CoinSpec(ComplexMatrix u, cplx a, cplx b);

  /// Hadamard coin with psi = (1, i) / sqrt 2; gives a walk symmetric about
  /// the origin.
  static CoinSpec symmetric_hadamard();
  /// U(p) = [[sqrt p, sqrt(1-p)], [sqrt(1-p), -sqrt p]] with psi = a|+> + b|->.
  static CoinSpec from_probabilities(double p_plus, cplx a = 1.0, cplx b = 0.0);

  const ComplexMatrix& u() const { return u_; }
  const CoinState& psi() const { return psi_; }
  /// |psi><psi|
  ComplexMatrix rho() const;

 private:
  ComplexMatrix u_;
  CoinState psi_;
};

ComplexMatrix hadamard();

struct CoinProbabilities {
  double plus;
  double minus;
};

/// p_m = Tr(P_m U rho_c U† P_m).
CoinProbabilities coin_probabilities(const CoinSpec& coin);

/// Kraus operators of a trace-preserving channel.
class KrausSet {
 public:
  /// Throws DimensionMismatch on unequal or non-square operators and
  /// NonUnitaryInput when sum K†K deviates from I by more than tol.
  explicit KrausSet(std::vector<ComplexMatrix> ops, double tol = 1e-11);

  std::size_t dim() const { return ops_.front().rows(); }
  const std::vector<ComplexMatrix>& ops() const { return ops_; }
  double completeness_defect() const { return defect_; }

 private:
  std::vector<ComplexMatrix> ops_;
  double defect_ = 0.0;
};

enum class Scheme { kCRW, kQRW1, kQRW2 };

std::string_view to_string(Scheme s);
/// Accepts "crw", "qrw1", "qrw2".
std::optional<Scheme> scheme_from_string(std::string_view s);

struct WalkState {
  DensityMatrix rho_w;
  std::size_t step_count;
  Scheme scheme;
};

/// V = P+ U ⊗ S+ + P- U ⊗ S-. Throws NonUnitaryInput when S+ or S- fail
/// unitarity by more than 1e-9.
ComplexMatrix build_step_unitary(const CoinSpec& coin,
                                 const ComplexMatrix& s_plus,
                                 const ComplexMatrix& s_minus);

/// Step unitary with the lattice shifts. Truncated shifts are not unitary
/// and are rejected with NonUnitaryInput.
ComplexMatrix build_step_unitary(const CoinSpec& coin, const WalkLattice& lat);

/// K_m = <m|V|psi>, the walker blocks of V applied to the coin state.
KrausSet kraus_from_unitary(const ComplexMatrix& v, const CoinState& psi);

/// sum_m K_m rho K_m†, re-Hermitized.
DensityMatrix cptp_apply(const KrausSet& k, const DensityMatrix& rho);

/// Tr_c(V (rho_c ⊗ rho_w) V†) with the coin dimension taken from the
/// shapes.
DensityMatrix coin_trace_channel(const ComplexMatrix& v,
                                 const ComplexMatrix& rho_c,
                                 const DensityMatrix& rho_w);

/// Walker state after n steps. CRW applies the one-step channel n times,
/// QRW1 traces the coin once after V^n, QRW2 applies the channel of V^2 n
/// times.
WalkState evolve(Scheme scheme, const CoinSpec& coin, const WalkLattice& lat,
                 const DensityMatrix& rho0, std::size_t n);

/// States for steps 0..n.
std::vector<WalkState> evolve_series(Scheme scheme, const CoinSpec& coin,
                                     const WalkLattice& lat,
                                     const DensityMatrix& rho0, std::size_t n);

/// Diagonal of rho, clamped at zero.
ProbVec position_pd(const DensityMatrix& rho);
ProbVec position_pd(const WalkState& state);

/// Tr(rho L^m). Throws InvalidState if the imaginary residue exceeds 1e-10.
double distance_moment(const DensityMatrix& rho, const ComplexMatrix& l,
                       unsigned m);

/// sqrt(<L^2> - <L>^2) for the lattice distance operator.
double sigma(const DensityMatrix& rho, const WalkLattice& lat);

/// B+ ∘ conj(B+) + B- ∘ conj(B-) for the Kraus pair of V^2.
StochMatrix delta_q_matrix(const CoinSpec& coin, const WalkLattice& lat);

/// Coefficients of E+^2, E-^2 and 1 in the QRW2 one-step matrix for the
/// coin U(p) with psi = a|+> + b|->: computed from the Kraus blocks, and
/// from the closed form as typeset (the identity coefficient has one
/// modulus unsquared) and with that square restored.
struct DeltaQCoefficients {
  double plus2 = 0.0;
  double minus2 = 0.0;
  double identity = 0.0;
};

struct DeltaQComparison {
  DeltaQCoefficients computed;
  DeltaQCoefficients closed_form_typeset;
  DeltaQCoefficients closed_form_squared;
};

DeltaQComparison delta_q_comparison(double p, cplx a, cplx b);

/// Compares the QRW1 pd recursion with memory term,
/// P(n+1) = Dc P(n) + (E+ - E-) M(n) P(0), against the directly computed
/// pd. Reports the max deviation per step; nothing is asserted.
struct Qrw1RecursionReport {
  std::vector<double> deviations;  // index n covers step n+1
  double max_deviation = 0.0;
};

Qrw1RecursionReport qrw1_recursion_report(const CoinSpec& coin,
                                          const WalkLattice& lat,
                                          std::size_t n);

/// V^{⊗k} on coin^{⊗k} ⊗ walker and its factorization into W_1 ... W_k.
struct Unitarization {
  ComplexMatrix v_k;
  std::vector<ComplexMatrix> w_chain;
};

/// Throws DimensionBudget when 2^k * d exceeds `cap`.
Unitarization unitarize_k(const CoinSpec& coin, const ComplexMatrix& s_plus,
                          const ComplexMatrix& s_minus, unsigned k,
                          std::size_t cap = 2048);

/// Tr over all k coins of V^{⊗k} (rho_c^{⊗k} ⊗ rho_w) V^{⊗k}†.
DensityMatrix k_coin_channel(const Unitarization& u, const CoinSpec& coin,
                             const DensityMatrix& rho_w);

/// Shift operators conjugated by the unitary DFT F_jk = e^{-2 pi i jk/M}/sqrt M.
struct FourierWalk {
  ComplexMatrix g_plus;
  ComplexMatrix g_minus;
  ComplexMatrix dft;
};

FourierWalk fourier_conjugate_walk(const WalkLattice& lat);

ComplexMatrix dft_matrix(std::size_t m);

}  // namespace qwalk
