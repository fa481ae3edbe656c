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

#include "qwalk/walks/walks.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {
namespace {

constexpr double kMassTolerance = 1e-9;
constexpr double kLineSumTolerance = 1e-10;

std::string fmt(double x) { return std::to_string(x); }

}  // namespace

// ---------------------------------------------------------------- ProbVec

ProbVec::ProbVec(std::vector<double> entries) : p_(std::move(entries)) {
  if (p_.empty()) throw DomainError("ProbVec: empty vector");
  for (auto& x : p_) {
    if (!std::isfinite(x) || x < -1e-12 || x > 1.0 + 1e-12) {
      throw DomainError("ProbVec: entry " + fmt(x) + " outside [0, 1]");
    }
    if (x < 0.0) x = 0.0;
  }
  const double s = sum();
  if (std::abs(s - 1.0) > 1e-10) {
    throw DomainError("ProbVec: entries sum to " + fmt(s));
  }
}

ProbVec ProbVec::point_mass(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DomainError("ProbVec::point_mass: index out of range");
  std::vector<double> p(dim, 0.0);
  p[index] = 1.0;
  return ProbVec(std::move(p));
}

ProbVec ProbVec::uniform(std::size_t dim) {
  if (dim == 0) throw DomainError("ProbVec::uniform: empty");
  return ProbVec(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

ProbVec ProbVec::normalized(std::vector<double> weights) {
  const double s = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(s > 0.0)) throw DomainError("ProbVec::normalized: non-positive mass");
  for (auto& w : weights) w /= s;
  return ProbVec(std::move(weights));
}

double ProbVec::sum() const { return std::accumulate(p_.begin(), p_.end(), 0.0); }

// ---------------------------------------------------------------- lattice

std::string_view to_string(Boundary b) {
  return b == Boundary::kCyclic ? "cyclic" : "truncated";
}

WalkLattice::WalkLattice(std::size_t size, Boundary boundary)
    : size_(size), boundary_(boundary) {
  if (size < 2) throw DomainError("WalkLattice: size must be >= 2");
}

long WalkLattice::min_label() const { return -static_cast<long>(size_ / 2); }

long WalkLattice::max_label() const {
  return static_cast<long>(size_) - 1 - static_cast<long>(size_ / 2);
}

long WalkLattice::label(std::size_t index) const {
  return static_cast<long>(index) - static_cast<long>(size_ / 2);
}

std::size_t WalkLattice::index(long label) const {
  if (label < min_label() || label > max_label()) {
    throw DomainError("WalkLattice: label " + std::to_string(label) +
                      " outside the lattice");
  }
  return static_cast<std::size_t>(label + static_cast<long>(size_ / 2));
}

long WalkLattice::difference(long a, long b) const {
  long d = a - b;
  if (!cyclic()) return d;
  const long n = static_cast<long>(size_);
  d = ((d - min_label()) % n + n) % n + min_label();
  return d;
}

// ----------------------------------------------------------- StochMatrix

std::string_view to_string(StochKind k) {
  switch (k) {
    case StochKind::kBistochastic:
      return "bistochastic";
    case StochKind::kColumnStochastic:
      return "column-stochastic";
    case StochKind::kGeneral:
      return "general";
  }
  return "general";
}

StochMatrix::StochMatrix(RealMatrix entries, StochKind kind)
    : m_(std::move(entries)), kind_(kind) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw DimensionMismatch("StochMatrix: matrix must be non-empty square");
  }
  for (double x : m_.entries()) {
    if (!std::isfinite(x) || x < -1e-14) {
      throw DomainError("StochMatrix: negative or non-finite entry " + fmt(x));
    }
  }
  if (kind_ != StochKind::kGeneral) {
    for (double s : m_.col_sums()) {
      if (std::abs(s - 1.0) > kLineSumTolerance) {
        throw DomainError("StochMatrix: column sum " + fmt(s));
      }
    }
  }
  if (kind_ == StochKind::kBistochastic) {
    for (double s : m_.row_sums()) {
      if (std::abs(s - 1.0) > kLineSumTolerance) {
        throw DomainError("StochMatrix: row sum " + fmt(s));
      }
    }
  }
}

// ------------------------------------------------------------- operators

ShiftOperators shift_operators(const WalkLattice& lat) {
  const std::size_t n = lat.size();
  ShiftOperators ops{ComplexMatrix(n, n), ComplexMatrix(n, n),
                     ComplexMatrix(n, n)};
  for (std::size_t m = 0; m < n; ++m) {
    if (m + 1 < n) {
      ops.e_plus(m + 1, m) = 1.0;
      ops.e_minus(m, m + 1) = 1.0;
    } else if (lat.cyclic()) {
      ops.e_plus(0, m) = 1.0;
      ops.e_minus(m, 0) = 1.0;
    }
    ops.distance(m, m) = static_cast<double>(lat.label(m));
  }
  return ops;
}

StochMatrix delta_matrix(const ProbVec& p, const WalkLattice& lat) {
  const std::size_t n = lat.size();
  if (p.dim() != n) {
    throw DimensionMismatch("delta_matrix: pd has dimension " +
                            std::to_string(p.dim()) + ", lattice has " +
                            std::to_string(n) + " sites");
  }
  const long sn = static_cast<long>(n);
  const long max_offset = (sn - 1) / 2;
  RealMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const long offset = static_cast<long>(i) - static_cast<long>(j);
      const auto r = static_cast<std::size_t>(((offset % sn) + sn) % sn);
      if (lat.cyclic()) {
        d(i, j) = p[r];
      } else {
        const long represented = static_cast<long>(r) <= max_offset
                                     ? static_cast<long>(r)
                                     : static_cast<long>(r) - sn;
        d(i, j) = represented == offset ? p[r] : 0.0;
      }
    }
  }
  return StochMatrix(std::move(d), lat.cyclic() ? StochKind::kBistochastic
                                                : StochKind::kGeneral);
}

ProbVec step(const StochMatrix& d, const ProbVec& p) {
  if (d.dim() != p.dim()) {
    throw DimensionMismatch("step: matrix dimension " + std::to_string(d.dim()) +
                            " vs pd dimension " + std::to_string(p.dim()));
  }
  std::vector<double> out = apply(d.matrix(), p.entries());
  double mass = std::accumulate(out.begin(), out.end(), 0.0);
  if (std::abs(mass - 1.0) > kMassTolerance) {
    throw NormalizationLost("step: walker mass " + fmt(mass) +
                            " left the lattice window");
  }
  if (std::abs(mass - 1.0) > 1e-12) {
    for (auto& x : out) x /= mass;
  }
  for (auto& x : out) {
    if (x < 0.0) x = 0.0;
  }
  return ProbVec(std::move(out));
}

ProbVec evolve(const StochMatrix& d, const ProbVec& p, std::size_t n) {
  ProbVec cur = p;
  for (std::size_t k = 0; k < n; ++k) cur = step(d, cur);
  return cur;
}

StochMatrix polya(const WalkLattice& lat) {
  const auto ops = shift_operators(lat);
  RealMatrix d = RealMatrix::from_complex(ops.e_plus + ops.e_minus);
  d *= 0.5;
  return StochMatrix(std::move(d), lat.cyclic() ? StochKind::kBistochastic
                                                : StochKind::kGeneral);
}

namespace {

std::optional<std::size_t> neighbour(const WalkLattice& lat, std::size_t j,
                                     int dir) {
  const long n = static_cast<long>(lat.size());
  long k = static_cast<long>(j) + dir;
  if (k < 0 || k >= n) {
    if (!lat.cyclic()) return std::nullopt;
    k = (k + n) % n;
  }
  return static_cast<std::size_t>(k);
}

void check_bias(double eps) {
  if (!(eps > -1.0 && eps < 1.0)) {
    throw DomainError("Gillis walk: eps = " + fmt(eps) +
                      " outside the open interval (-1, 1)");
  }
}

}  // namespace

StochMatrix gillis_general(const WalkLattice& lat, double eps, long center,
                           int exponent) {
  check_bias(eps);
  if (exponent < 1) throw DomainError("Gillis walk: exponent must be >= 1");
  (void)lat.index(center);  // range check

  const std::size_t n = lat.size();
  RealMatrix d(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const long offset = lat.difference(lat.label(j), center);
    double bias = 0.0;
    if (offset != 0) bias = eps / std::pow(static_cast<double>(offset), exponent);
    if (auto down = neighbour(lat, j, -1)) d(*down, j) += 0.5 * (1.0 + bias);
    if (auto up = neighbour(lat, j, +1)) d(*up, j) += 0.5 * (1.0 - bias);
  }
  return StochMatrix(std::move(d), lat.cyclic() ? StochKind::kColumnStochastic
                                                : StochKind::kGeneral);
}

StochMatrix gillis(const WalkLattice& lat, double eps) {
  return gillis_general(lat, eps, 0, 1);
}

StochMatrix ls_walk(const WalkLattice& lat, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw DomainError("LS walk: eps must be positive, got " + fmt(eps));
  }
  const std::size_t n = lat.size();
  const double prefactor = 0.5 * std::expm1(eps);
  RealMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const long dist = std::labs(lat.difference(lat.label(i), lat.label(j)));
      d(i, j) = prefactor * std::exp(-static_cast<double>(dist) * eps);
    }
  }
  const auto sums = d.col_sums();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d(i, j) /= sums[j];
  }
  return StochMatrix(std::move(d), lat.cyclic() ? StochKind::kBistochastic
                                                : StochKind::kColumnStochastic);
}

StochMatrix gillis2d(const WalkLattice& lat, const GillisAxis& first,
                     const GillisAxis& second, double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw DomainError("gillis2d: mixing weight q = " + fmt(q) +
                      " outside [0, 1]");
  }
  const RealMatrix d1 =
      gillis_general(lat, first.eps, first.center, first.exponent).matrix();
  const RealMatrix d2 =
      gillis_general(lat, second.eps, second.center, second.exponent).matrix();
  RealMatrix out = kron(d1, d2);
  out *= q;
  out.add_scaled(1.0 - q, kron(d2, d1));
  return StochMatrix(std::move(out), lat.cyclic() ? StochKind::kColumnStochastic
                                                  : StochKind::kGeneral);
}

}  // namespace qwalk
