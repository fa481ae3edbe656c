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

// Walks on Z_N split along the Chinese remainder isomorphism
// Z_N ≅ Z_N1 x ... x Z_Nk for pairwise coprime factors.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "qwalk/numkit/complex_matrix.hpp"
#include "qwalk/walks/walks.hpp"

namespace qwalk {

using Residues = std::vector<std::size_t>;

/// Validated coprime factorization n = N1 * ... * Nk with the remainder
/// table x -> (x mod N1, ..., x mod Nk).
class CrtSplit {
 public:
  /// Throws DomainError unless there are at least two factors, each >= 2,
  /// pairwise coprime.
  explicit CrtSplit(std::vector<std::size_t> factors);

  std::size_t n() const { return n_; }
  const std::vector<std::size_t>& factors() const { return factors_; }
  std::size_t arity() const { return factors_.size(); }
  const Residues& residues(std::size_t x) const { return table_[x]; }

  /// Row-major tensor index of a residue tuple: ((r1 * N2) + r2) * N3 + ...
  std::size_t tensor_index(const Residues& r) const;

 private:
  std::size_t n_ = 1;
  std::vector<std::size_t> factors_;
  std::vector<Residues> table_;
};

Residues crt_delta(const CrtSplit& split, std::size_t x);

/// Inverse of crt_delta by modular-inverse reconstruction.
std::size_t crt_mu(const CrtSplit& split, const Residues& remainders);

/// Permutation matrix with V e_x = e_{r1} ⊗ ... ⊗ e_{rk}, (r) = crt_delta(x).
ComplexMatrix v_delta(const CrtSplit& split);

/// Applies V_delta to a real vector without forming the matrix.
std::vector<double> permute_to_tensor(const CrtSplit& split,
                                      std::span<const double> p);

/// Splits p into per-factor marginals when the permuted vector is their
/// tensor product within 1e-10; empty otherwise.
std::optional<std::vector<ProbVec>> factorize(const ProbVec& p,
                                              const CrtSplit& split);

/// Two-factor form of factorize.
std::optional<std::pair<ProbVec, ProbVec>> factorize_pd(const ProbVec& p,
                                                        const CrtSplit& split);

/// Circulant transition matrix on Z_n with step pd p (cyclic lattice).
StochMatrix circulant(const ProbVec& p);

/// (p ★ q)_r = sum_s p_s q_{r-s mod n}
ProbVec cyclic_convolution(const ProbVec& p, const ProbVec& q);

struct FactorizationReport {
  std::vector<ProbVec> factors;
  /// max |V D V† - D1 ⊗ D2|
  double conjugation_deviation = 0.0;
  /// step_deviations[k] = max |V D^k p - (D1^k P1) ⊗ (D2^k P2)|, k = 0..n
  std::vector<double> step_deviations;
  double max_deviation = 0.0;
};

/// The walk with step pd p, started from p, against its factor walks.
/// Throws NotFactorizable if p does not split over `split`.
FactorizationReport factorization_check(const ProbVec& p, const CrtSplit& split,
                                        std::size_t n_steps);

struct CoassocReport {
  std::vector<ProbVec> factors;
  /// max |(V12 ⊗ I) V(12,3) - (I ⊗ V23) V(1,23)|
  double composite_deviation = 0.0;
  /// Per step, the largest disagreement among the three bracketings
  /// ((1,2),3), (1,(2,3)) and (1,2,3) of the evolved pd.
  std::vector<double> step_deviations;
  double max_deviation = 0.0;
};

/// Requires a three-factor split. Throws NotFactorizable if p does not split
/// into three factor pd's.
CoassocReport coassoc_check(const ProbVec& p, const CrtSplit& three_split,
                            std::size_t n_steps);

}  // namespace qwalk
