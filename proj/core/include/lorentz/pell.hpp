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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lorentz/integer.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

// Continued fraction of sqrt(d): [a0; period, period, ...]. The period is
// the minimal one and always ends with 2*a0.
struct CFExpansion {
  Integer d;
  Integer a0;
  std::vector<Integer> period;

  // Partial quotient a_i for any i >= 0.
  const Integer& term(std::size_t i) const;
};

// P/Q is the index-th convergent.
struct Convergent {
  Integer P;
  Integer Q;
  std::size_t index = 0;
};

// A solution of x^2 - d*y^2 = 1 with x >= 1, y >= 0. The constructor checks
// the equation, so every PellSolution in existence is a genuine solution.
class PellSolution {
 public:
  PellSolution(Integer x, Integer y, Integer d);

  const Integer& x() const noexcept { return x_; }
  const Integer& y() const noexcept { return y_; }
  const Integer& d() const noexcept { return d_; }
  bool is_trivial() const { return x_ == 1 && y_ == 0; }

  friend bool operator==(const PellSolution&, const PellSolution&) = default;

 private:
  Integer x_;
  Integer y_;
  Integer d_;
};

// Throws std::domain_error for d < 2 or d a perfect square.
CFExpansion cf_sqrt(const Integer& d);

// The first `count` convergents (count >= 1).
std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t count);

// Convergent index holding the fundamental solution: s-1 for an even period
// length s, 2s-1 for an odd one.
std::size_t fundamental_index(const CFExpansion& cf);

PellSolution pell_min_solution(const Integer& d);

// The first `count` nontrivial solutions in increasing order.
std::vector<PellSolution> pell_solutions(const Integer& d, std::size_t count);

// A point (x, y) on the conic x^2 - D*y^2 = 1 where D may be rational; with
// D = c^2 this is the quasi-Pell equation of the spectrum recurrence.
struct ConicPoint {
  Rational x;
  Rational y;

  friend bool operator==(const ConicPoint&, const ConicPoint&) = default;
};

bool on_conic(const ConicPoint& s, const Rational& dsq);

// (u, v) (x) (x', y') = (u x' + D v y', v x' + u y'). Both arguments must lie
// on the conic, otherwise std::domain_error.
ConicPoint pell_compose(const ConicPoint& s, const ConicPoint& t,
                        const Rational& dsq);

// k-fold composition by left fold; k = 0 gives (1, 0).
ConicPoint pell_power(const ConicPoint& s, std::int64_t k, const Rational& dsq);

// Same value as pell_power, by square-and-multiply.
ConicPoint pell_power_binary(const ConicPoint& s, std::int64_t k,
                             const Rational& dsq);

}  // namespace lorentz
