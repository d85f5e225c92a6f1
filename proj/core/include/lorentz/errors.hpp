// Copyright 2026 The lorentz-torus Authors
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
#include <string_view>

namespace lorentz {

// Precondition violations on mathematical inputs (perfect-square radicand,
// negative exponent, mismatched radicands, ...) are reported as
// std::domain_error. The types below cover the cases where callers need to
// know *which* criterion failed.

// Why a triple (m, n, p) was rejected by triple_check.
enum class TripleFault {
  kMBelowTwo,
  kNonPositiveN,
  kNonPositiveP,
  kEquation,  // m^2 - n*p != 1
};

std::string_view describe(TripleFault fault);

class TripleError : public std::invalid_argument {
 public:
  explicit TripleError(TripleFault fault);
  TripleFault fault() const noexcept { return fault_; }

 private:
  TripleFault fault_;
};

// Why a relative speed V or a pair (V, c^2) is not admissible.
enum class Criterion {
  kDenominatorBelowTwo,     // V = n/m in lowest terms with m < 2
  kNDoesNotDivide,          // n does not divide m^2 - 1
  kGammaNotPerfectSquare,   // 1 / (1 - V^2/c^2) is not the square of an integer
  kNonIntegralEntries,      // n = mV or p = mV/c^2 is not an integer
  kRationalLightSpeed,      // c^2 is the square of a rational
};

std::string_view describe(Criterion criterion);

class Inadmissible : public std::invalid_argument {
 public:
  explicit Inadmissible(Criterion criterion);
  Criterion criterion() const noexcept { return criterion_; }

 private:
  Criterion criterion_;
};

// An iteration budget was too small to reach the requested result.
class IterationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lorentz
