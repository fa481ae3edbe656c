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

#include <cstddef>
#include <string_view>
#include <vector>

#include "qwalk/walks/walks.hpp"

namespace qwalk {

enum class MajorizationRelation { kXMajorizesY, kYMajorizesX, kEqual, kIncomparable };

std::string_view to_string(MajorizationRelation r);

struct MajorizationVerdict {
  MajorizationRelation relation;
  /// max_k |X_k - Y_k| over the descending-sorted prefix sums.
  double max_partial_sum_gap;
};

/// Prefix-sum tolerance for majorization comparisons.
inline constexpr double kMajorizationTolerance = 1e-10;

/// Compares x and y under majorization. Vectors of different length are
/// zero-padded. Equal means the sorted vectors agree within 1e-12.
MajorizationVerdict majorizes(const ProbVec& x, const ProbVec& y);

/// x sorted descending; ties keep their original order.
std::vector<double> sorted_descending(const ProbVec& x);

/// Natural-log entropy with 0 log 0 = 0.
double shannon_entropy(const ProbVec& p);

/// sum_i p_i^k for k <= 1. Throws DomainError for k > 1, or for k < 0 when
/// p has a zero entry.
double power_sum(const ProbVec& p, double k);

/// -prod_i p_i
double negative_product(const ProbVec& p);

/// Nonnegative within tol and every row/column sum within tol of 1.
bool is_bistochastic(const RealMatrix& d, double tol);
bool is_bistochastic(const StochMatrix& d, double tol);

/// Convex mix (1 - t) I + t Q_{ij} of the identity and the transposition of
/// coordinates i and j.
struct TTransform {
  std::size_t i;
  std::size_t j;
  double t;
};

struct TTransformChain {
  StochMatrix matrix;                 // bistochastic, matrix * q = p
  std::vector<TTransform> transforms; // in application order
};

/// Builds a bistochastic A with A q = p from a product of at most dim-1
/// T-transforms. Requires q to majorize p (or equal it up to ordering);
/// throws NotMajorized otherwise.
TTransformChain t_transform_chain(const ProbVec& q, const ProbVec& p);

RealMatrix t_transform_matrix(std::size_t dim, const TTransform& t);

}  // namespace qwalk
