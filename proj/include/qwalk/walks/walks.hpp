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

// Classical walks on a finite window of the integer lattice: probability
// vectors, transition ("delta") matrices and the named walk families.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "qwalk/numkit/complex_matrix.hpp"
#include "qwalk/numkit/real_matrix.hpp"

namespace qwalk {

/// Finite probability vector. Entries are clamped at zero on construction
/// (values down to -1e-12 are accepted as round-off) and must sum to 1
/// within 1e-10.
class ProbVec {
 public:
  explicit ProbVec(std::vector<double> entries);

  static ProbVec point_mass(std::size_t dim, std::size_t index);
  static ProbVec uniform(std::size_t dim);
  /// Divides by the sum first; throws DomainError on a non-positive sum.
  static ProbVec normalized(std::vector<double> weights);

  std::size_t dim() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  std::span<const double> entries() const { return p_; }
  double sum() const;

  friend bool operator==(const ProbVec&, const ProbVec&) = default;

 private:
  std::vector<double> p_;
};

enum class Boundary { kCyclic, kTruncated };

std::string_view to_string(Boundary b);

/// Sites carry centered labels -floor(size/2) ... size-1-floor(size/2);
/// site index = label + floor(size/2).
class WalkLattice {
 public:
  WalkLattice(std::size_t size, Boundary boundary = Boundary::kCyclic);

  std::size_t size() const { return size_; }
  Boundary boundary() const { return boundary_; }
  bool cyclic() const { return boundary_ == Boundary::kCyclic; }

  long min_label() const;
  long max_label() const;
  long label(std::size_t index) const;
  std::size_t index(long label) const;
  /// Index of the site origin.
  std::size_t origin() const { return size_ / 2; }

  /// Signed difference a - b; on cyclic lattices reduced into the label
  /// range.
  long difference(long a, long b) const;

 private:
  std::size_t size_;
  Boundary boundary_;
};

enum class StochKind { kBistochastic, kColumnStochastic, kGeneral };

std::string_view to_string(StochKind k);

/// Real nonnegative square transition matrix acting on column vectors:
/// entry (i, j) is the probability to move from site j to site i.
class StochMatrix {
 public:
  /// Validates entries >= -1e-14 and the line sums implied by `kind`
  /// (within 1e-10). Throws DomainError on violation.
  StochMatrix(RealMatrix entries, StochKind kind);

  std::size_t dim() const { return m_.rows(); }
  StochKind kind() const { return kind_; }
  const RealMatrix& matrix() const { return m_; }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  RealMatrix m_;
  StochKind kind_;
};

struct ShiftOperators {
  ComplexMatrix e_plus;    // e_m -> e_{m+1}
  ComplexMatrix e_minus;   // e_m -> e_{m-1}
  ComplexMatrix distance;  // diag of site labels
};

ShiftOperators shift_operators(const WalkLattice& lat);

/// D_ij = p[(i - j) mod N]: p is indexed by step offset, entry r standing
/// for offset r when r <= (N-1)/2 and r - N otherwise. On truncated
/// lattices only offsets i - j that are representable without wrap keep
/// their weight; the matrix is not renormalized.
StochMatrix delta_matrix(const ProbVec& p, const WalkLattice& lat);

/// One step p -> D p. Throws NormalizationLost if the result's mass is off
/// by more than 1e-9; smaller drift is renormalized away.
ProbVec step(const StochMatrix& d, const ProbVec& p);

/// n successive steps.
ProbVec evolve(const StochMatrix& d, const ProbVec& p, std::size_t n);

/// Symmetric nearest-neighbour walk, (E_- + E_+) / 2.
StochMatrix polya(const WalkLattice& lat);

/// Nearest-neighbour walk biased towards (eps > 0) or away from (eps < 0)
/// the origin, with bias eps / l' at source label l' != 0.
StochMatrix gillis(const WalkLattice& lat, double eps);

/// Gillis walk with bias centre `center`, decay exponent `exponent` and
/// strength eps: from source label l' != center the walker steps to l'-1
/// with probability (1 + eps / (l' - center)^exponent) / 2 and to l'+1 with
/// the complement; from the centre it steps symmetrically.
StochMatrix gillis_general(const WalkLattice& lat, double eps, long center,
                           int exponent);

/// Symmetric walk with exponentially distributed jump lengths. Weights
/// ((e^eps - 1) / 2) e^{-|l-l'| eps} off the diagonal (cyclic distance on
/// cyclic lattices), then every column renormalized to sum 1.
StochMatrix ls_walk(const WalkLattice& lat, double eps);

struct GillisAxis {
  double eps = 0.0;
  long center = 0;
  int exponent = 1;
};

/// q D(x) ⊗ D(y) + (1 - q) D(y) ⊗ D(x) on the size^2 product lattice, with
/// D the one-axis generalized Gillis matrix.
StochMatrix gillis2d(const WalkLattice& lat, const GillisAxis& first,
                     const GillisAxis& second, double q);

}  // namespace qwalk
