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

#include "qwalk/zn/zn_factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "qwalk/error.hpp"
#include "qwalk/numkit/linalg.hpp"

namespace qwalk {
namespace {

constexpr double kFactorTolerance = 1e-10;

// Inverse of a modulo m for gcd(a, m) = 1.
std::size_t mod_inverse(std::size_t a, std::size_t m) {
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(m), new_r = static_cast<long long>(a % m);
  while (new_r != 0) {
    const long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  const long long mm = static_cast<long long>(m);
  return static_cast<std::size_t>(((t % mm) + mm) % mm);
}

// Tensor of vectors over (Z_a, Z_b) whose first index is itself split by
// `inner`, rewritten in the fully split row-major layout.
std::vector<double> expand_first(const CrtSplit& inner,
                                 std::span<const double> t, std::size_t b) {
  std::vector<double> out(t.size());
  for (std::size_t s = 0; s < inner.n(); ++s) {
    const std::size_t base = inner.tensor_index(inner.residues(s));
    for (std::size_t r = 0; r < b; ++r) out[base * b + r] = t[s * b + r];
  }
  return out;
}

std::vector<double> expand_second(const CrtSplit& inner,
                                  std::span<const double> t, std::size_t a) {
  std::vector<double> out(t.size());
  const std::size_t nb = inner.n();
  for (std::size_t r = 0; r < a; ++r) {
    for (std::size_t s = 0; s < nb; ++s) {
      out[r * nb + inner.tensor_index(inner.residues(s))] = t[r * nb + s];
    }
  }
  return out;
}

}  // namespace

CrtSplit::CrtSplit(std::vector<std::size_t> factors)
    : factors_(std::move(factors)) {
  if (factors_.size() < 2) {
    throw DomainError("CrtSplit: need at least two factors");
  }
  for (std::size_t f : factors_) {
    if (f < 2) throw DomainError("CrtSplit: factor " + std::to_string(f) + " < 2");
    n_ *= f;
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (std::size_t j = i + 1; j < factors_.size(); ++j) {
      if (std::gcd(factors_[i], factors_[j]) != 1) {
        throw DomainError("CrtSplit: factors " + std::to_string(factors_[i]) +
                          " and " + std::to_string(factors_[j]) +
                          " are not coprime");
      }
    }
  }
  table_.reserve(n_);
  for (std::size_t x = 0; x < n_; ++x) {
    Residues r(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) r[j] = x % factors_[j];
    table_.push_back(std::move(r));
  }
}

std::size_t CrtSplit::tensor_index(const Residues& r) const {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) idx = idx * factors_[j] + r[j];
  return idx;
}

Residues crt_delta(const CrtSplit& split, std::size_t x) {
  if (x >= split.n()) {
    throw DomainError("crt_delta: " + std::to_string(x) + " outside Z_" +
                      std::to_string(split.n()));
  }
  return split.residues(x);
}

std::size_t crt_mu(const CrtSplit& split, const Residues& remainders) {
  const auto& f = split.factors();
  if (remainders.size() != f.size()) {
    throw DomainError("crt_mu: expected " + std::to_string(f.size()) +
                      " remainders");
  }
  const std::size_t n = split.n();
  std::size_t x = 0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (remainders[j] >= f[j]) {
      throw DomainError("crt_mu: remainder " + std::to_string(remainders[j]) +
                        " outside Z_" + std::to_string(f[j]));
    }
    const std::size_t m = n / f[j];
    const std::size_t term =
        (remainders[j] * mod_inverse(m % f[j], f[j])) % f[j] * m;
    x = (x + term) % n;
  }
  return x;
}

ComplexMatrix v_delta(const CrtSplit& split) {
  const std::size_t n = split.n();
  ComplexMatrix v(n, n);
  for (std::size_t x = 0; x < n; ++x) v(split.tensor_index(split.residues(x)), x) = 1.0;
  return v;
}

std::vector<double> permute_to_tensor(const CrtSplit& split,
                                      std::span<const double> p) {
  if (p.size() != split.n()) {
    throw DimensionMismatch("permute_to_tensor: vector has dimension " +
                            std::to_string(p.size()));
  }
  std::vector<double> out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    out[split.tensor_index(split.residues(x))] = p[x];
  }
  return out;
}

std::optional<std::vector<ProbVec>> factorize(const ProbVec& p,
                                              const CrtSplit& split) {
  if (p.dim() != split.n()) {
    throw DimensionMismatch("factorize: pd has dimension " +
                            std::to_string(p.dim()) + ", split covers " +
                            std::to_string(split.n()));
  }
  const auto& f = split.factors();
  std::vector<std::vector<double>> marg(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) marg[j].assign(f[j], 0.0);
  for (std::size_t x = 0; x < p.dim(); ++x) {
    const auto& r = split.residues(x);
    for (std::size_t j = 0; j < f.size(); ++j) marg[j][r[j]] += p[x];
  }
  for (std::size_t x = 0; x < p.dim(); ++x) {
    const auto& r = split.residues(x);
    double prod = 1.0;
    for (std::size_t j = 0; j < f.size(); ++j) prod *= marg[j][r[j]];
    if (std::abs(prod - p[x]) > kFactorTolerance) return std::nullopt;
  }
  std::vector<ProbVec> out;
  out.reserve(f.size());
  for (auto& m : marg) out.push_back(ProbVec::normalized(std::move(m)));
  return out;
}

std::optional<std::pair<ProbVec, ProbVec>> factorize_pd(const ProbVec& p,
                                                        const CrtSplit& split) {
  if (split.arity() != 2) {
    throw DomainError("factorize_pd: two-factor split required");
  }
  auto parts = factorize(p, split);
  if (!parts) return std::nullopt;
  return std::make_pair((*parts)[0], (*parts)[1]);
}

StochMatrix circulant(const ProbVec& p) {
  return delta_matrix(p, WalkLattice(p.dim(), Boundary::kCyclic));
}

ProbVec cyclic_convolution(const ProbVec& p, const ProbVec& q) {
  if (p.dim() != q.dim()) {
    throw DimensionMismatch("cyclic_convolution: dimensions differ");
  }
  const std::size_t n = p.dim();
  std::vector<double> out(n, 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) out[(s + t) % n] += p[s] * q[t];
  }
  return ProbVec::normalized(std::move(out));
}

FactorizationReport factorization_check(const ProbVec& p, const CrtSplit& split,
                                        std::size_t n_steps) {
  if (split.arity() != 2) {
    throw DomainError("factorization_check: two-factor split required");
  }
  auto parts = factorize(p, split);
  if (!parts) {
    throw NotFactorizable("factorization_check: pd does not split over Z_" +
                          std::to_string(split.factors()[0]) + " x Z_" +
                          std::to_string(split.factors()[1]));
  }
  FactorizationReport rep{*parts, 0.0, {}, 0.0};
  const ProbVec& p1 = rep.factors[0];
  const ProbVec& p2 = rep.factors[1];

  const StochMatrix d = circulant(p);
  const StochMatrix d1 = circulant(p1);
  const StochMatrix d2 = circulant(p2);
  const ComplexMatrix v = v_delta(split);
  const ComplexMatrix conj = sandwich(v, d.matrix().to_complex());
  rep.conjugation_deviation =
      max_abs_diff(conj, kron(d1.matrix(), d2.matrix()).to_complex());
  rep.max_deviation = rep.conjugation_deviation;

  ProbVec cur = p, cur1 = p1, cur2 = p2;
  for (std::size_t k = 0; k <= n_steps; ++k) {
    if (k > 0) {
      cur = step(d, cur);
      cur1 = step(d1, cur1);
      cur2 = step(d2, cur2);
    }
    const double dev = max_abs_diff(permute_to_tensor(split, cur.entries()),
                                    kron(cur1.entries(), cur2.entries()));
    rep.step_deviations.push_back(dev);
    rep.max_deviation = std::max(rep.max_deviation, dev);
  }
  return rep;
}

CoassocReport coassoc_check(const ProbVec& p, const CrtSplit& three_split,
                            std::size_t n_steps) {
  if (three_split.arity() != 3) {
    throw DomainError("coassoc_check: three-factor split required");
  }
  const std::size_t n1 = three_split.factors()[0];
  const std::size_t n2 = three_split.factors()[1];
  const std::size_t n3 = three_split.factors()[2];
  const CrtSplit s12({n1, n2});
  const CrtSplit s23({n2, n3});
  const CrtSplit s12_3({n1 * n2, n3});
  const CrtSplit s1_23({n1, n2 * n3});

  auto parts = factorize(p, three_split);
  if (!parts) {
    throw NotFactorizable("coassoc_check: pd does not split over Z_" +
                          std::to_string(n1) + " x Z_" + std::to_string(n2) +
                          " x Z_" + std::to_string(n3));
  }
  // A three-way split implies both coarser splits.
  auto left = factorize(p, s12_3);
  auto right = factorize(p, s1_23);
  if (!left || !right) {
    throw NotFactorizable("coassoc_check: pd does not split pairwise");
  }

  CoassocReport rep{*parts, 0.0, {}, 0.0};
  const ComplexMatrix a = kron(v_delta(s12), ComplexMatrix::identity(n3)) *
                          v_delta(s12_3);
  const ComplexMatrix b = kron(ComplexMatrix::identity(n1), v_delta(s23)) *
                          v_delta(s1_23);
  rep.composite_deviation = max_abs_diff(a, b);
  rep.max_deviation = rep.composite_deviation;

  const StochMatrix d = circulant(p);
  const StochMatrix d12 = circulant((*left)[0]);
  const StochMatrix d3 = circulant((*left)[1]);
  const StochMatrix d1 = circulant((*right)[0]);
  const StochMatrix d23 = circulant((*right)[1]);

  ProbVec whole = p;
  ProbVec l12 = (*left)[0], l3 = (*left)[1];
  ProbVec r1 = (*right)[0], r23 = (*right)[1];
  for (std::size_t k = 0; k <= n_steps; ++k) {
    if (k > 0) {
      whole = step(d, whole);
      l12 = step(d12, l12);
      l3 = step(d3, l3);
      r1 = step(d1, r1);
      r23 = step(d23, r23);
    }
    const auto flat = permute_to_tensor(three_split, whole.entries());
    const auto lb = expand_first(s12, kron(l12.entries(), l3.entries()), n3);
    const auto rb = expand_second(s23, kron(r1.entries(), r23.entries()), n1);
    const double dev = std::max({max_abs_diff(flat, lb), max_abs_diff(flat, rb),
                                 max_abs_diff(lb, rb)});
    rep.step_deviations.push_back(dev);
    rep.max_deviation = std::max(rep.max_deviation, dev);
  }
  return rep;
}

}  // namespace qwalk
