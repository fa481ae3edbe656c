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

#include "qwalk/majorization/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qwalk/error.hpp"

namespace qwalk {
namespace {

std::vector<std::size_t> descending_order(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  return order;
}

}  // namespace

std::string_view to_string(MajorizationRelation r) {
  switch (r) {
    case MajorizationRelation::kXMajorizesY:
      return "x_majorizes_y";
    case MajorizationRelation::kYMajorizesX:
      return "y_majorizes_x";
    case MajorizationRelation::kEqual:
      return "equal";
    case MajorizationRelation::kIncomparable:
      return "incomparable";
  }
  return "incomparable";
}

std::vector<double> sorted_descending(const ProbVec& x) {
  std::vector<double> v(x.entries().begin(), x.entries().end());
  std::stable_sort(v.begin(), v.end(), std::greater<>());
  return v;
}

MajorizationVerdict majorizes(const ProbVec& x, const ProbVec& y) {
  std::vector<double> xs = sorted_descending(x);
  std::vector<double> ys = sorted_descending(y);
  const std::size_t n = std::max(xs.size(), ys.size());
  xs.resize(n, 0.0);
  ys.resize(n, 0.0);

  bool x_dominates = true;
  bool y_dominates = true;
  double max_gap = 0.0;
  double gap_sum = 0.0;
  double max_entry_diff = 0.0;
  double px = 0.0;
  double py = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    px += xs[k];
    py += ys[k];
    const double gap = px - py;
    if (gap < -kMajorizationTolerance) x_dominates = false;
    if (gap > kMajorizationTolerance) y_dominates = false;
    max_gap = std::max(max_gap, std::abs(gap));
    gap_sum += gap;
    max_entry_diff = std::max(max_entry_diff, std::abs(xs[k] - ys[k]));
  }

  MajorizationRelation rel = MajorizationRelation::kIncomparable;
  if (max_entry_diff <= 1e-12) {
    rel = MajorizationRelation::kEqual;
  } else if (x_dominates && y_dominates) {
    // Both hold only within tolerance; report the direction of the bulk gap.
    rel = gap_sum >= 0.0 ? MajorizationRelation::kXMajorizesY
                         : MajorizationRelation::kYMajorizesX;
  } else if (x_dominates) {
    rel = MajorizationRelation::kXMajorizesY;
  } else if (y_dominates) {
    rel = MajorizationRelation::kYMajorizesX;
  }
  return {rel, max_gap};
}

double shannon_entropy(const ProbVec& p) {
  double s = 0.0;
  for (double x : p.entries()) {
    if (x > 0.0) s -= x * std::log(x);
  }
  return s;
}

double power_sum(const ProbVec& p, double k) {
  if (k > 1.0) {
    throw DomainError("power_sum: exponent " + std::to_string(k) +
                      " exceeds 1");
  }
  double s = 0.0;
  for (double x : p.entries()) {
    if (k < 0.0 && x == 0.0) {
      throw DomainError("power_sum: negative exponent with a zero entry");
    }
    s += std::pow(x, k);
  }
  return s;
}

double negative_product(const ProbVec& p) {
  double prod = 1.0;
  for (double x : p.entries()) prod *= x;
  return -prod;
}

bool is_bistochastic(const RealMatrix& d, double tol) {
  if (d.rows() != d.cols()) {
    throw DimensionMismatch("is_bistochastic: matrix is not square");
  }
  for (double x : d.entries()) {
    if (!(x >= -tol)) return false;
  }
  for (double s : d.row_sums()) {
    if (std::abs(s - 1.0) > tol) return false;
  }
  for (double s : d.col_sums()) {
    if (std::abs(s - 1.0) > tol) return false;
  }
  return true;
}

bool is_bistochastic(const StochMatrix& d, double tol) {
  return is_bistochastic(d.matrix(), tol);
}

RealMatrix t_transform_matrix(std::size_t dim, const TTransform& t) {
  if (t.i >= dim || t.j >= dim) {
    throw DomainError("t_transform_matrix: coordinate out of range");
  }
  RealMatrix m = RealMatrix::identity(dim);
  m(t.i, t.i) = 1.0 - t.t;
  m(t.j, t.j) = 1.0 - t.t;
  m(t.i, t.j) = t.t;
  m(t.j, t.i) = t.t;
  return m;
}

TTransformChain t_transform_chain(const ProbVec& q, const ProbVec& p) {
  const std::size_t n = q.dim();
  if (p.dim() != n) {
    throw DimensionMismatch("t_transform_chain: dimensions " +
                            std::to_string(q.dim()) + " and " +
                            std::to_string(p.dim()));
  }
  const auto verdict = majorizes(q, p);
  if (verdict.relation != MajorizationRelation::kXMajorizesY &&
      verdict.relation != MajorizationRelation::kEqual) {
    throw NotMajorized("t_transform_chain: q does not majorize p (" +
                       std::string(to_string(verdict.relation)) + ")");
  }

  const auto order_p = descending_order(p.entries());
  const auto order_q = descending_order(q.entries());

  // Start from the permutation that lays q out in p's rank order.
  RealMatrix a(n, n);
  std::vector<double> x(n);  // current vector, sorted positions
  std::vector<double> y(n);  // target, sorted positions
  for (std::size_t s = 0; s < n; ++s) {
    a(order_p[s], order_q[s]) = 1.0;
    x[s] = q[order_q[s]];
    y[s] = p[order_p[s]];
  }

  constexpr double kFixed = 1e-15;
  std::vector<TTransform> transforms;
  for (std::size_t iter = 0; iter < n; ++iter) {
    // Largest sorted position where the current vector still exceeds the
    // target, and the first deficit after it.
    std::size_t j = n;
    for (std::size_t s = n; s-- > 0;) {
      if (x[s] > y[s] + kFixed) {
        j = s;
        break;
      }
    }
    if (j == n) break;
    std::size_t k = n;
    for (std::size_t s = j + 1; s < n; ++s) {
      if (x[s] < y[s] - kFixed) {
        k = s;
        break;
      }
    }
    if (k == n) break;  // residual within prefix-sum tolerance

    const double excess = x[j] - y[j];
    const double deficit = y[k] - x[k];
    const double delta = std::min(excess, deficit);
    const double t = delta / (x[j] - x[k]);
    if (excess <= deficit) {
      x[j] = y[j];
      x[k] += delta;
    } else {
      x[k] = y[k];
      x[j] -= delta;
    }

    const TTransform tt{order_p[j], order_p[k], t};
    transforms.push_back(tt);
    // Left-multiply a by the T-transform: mix rows tt.i and tt.j.
    auto ri = a.row(tt.i);
    auto rj = a.row(tt.j);
    for (std::size_t c = 0; c < n; ++c) {
      const double vi = ri[c];
      const double vj = rj[c];
      ri[c] = (1.0 - t) * vi + t * vj;
      rj[c] = (1.0 - t) * vj + t * vi;
    }
  }

  return {StochMatrix(std::move(a), StochKind::kBistochastic),
          std::move(transforms)};
}

}  // namespace qwalk
