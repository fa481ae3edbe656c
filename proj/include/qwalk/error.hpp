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

#include <stdexcept>
#include <string>

namespace qwalk {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's preconditions.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NotMajorized : public Error {
 public:
  using Error::Error;
};

class NotFactorizable : public Error {
 public:
  using Error::Error;
};

class NonUnitaryInput : public Error {
 public:
  using Error::Error;
};

// Numerical guards: the inputs were well-formed but the computation would
// leave its region of validity.
class NumericalGuard : public Error {
 public:
  using Error::Error;
};

class NormalizationLost : public NumericalGuard {
 public:
  using NumericalGuard::NumericalGuard;
};

class DimensionBudget : public NumericalGuard {
 public:
  using NumericalGuard::NumericalGuard;
};

class TruncationInadequate : public NumericalGuard {
 public:
  using NumericalGuard::NumericalGuard;
};

class StabilityBound : public NumericalGuard {
 public:
  using NumericalGuard::NumericalGuard;
};

class ScalingInvalid : public NumericalGuard {
 public:
  using NumericalGuard::NumericalGuard;
};

class OverflowGuard : public NumericalGuard {
 public:
  using NumericalGuard::NumericalGuard;
};

class InvalidState : public NumericalGuard {
 public:
  using NumericalGuard::NumericalGuard;
};

}  // namespace qwalk
