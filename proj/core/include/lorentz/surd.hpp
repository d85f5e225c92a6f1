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

#include <ostream>
#include <string>
#include <string_view>

#include "lorentz/integer.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

// Exact element a + b*sqrt(d) of Q(sqrt(d)).
//
// The radicand is kept exactly as given (it is not reduced to its squarefree
// part), so 3 + 1*sqrt(8) and 3 + 2*sqrt(2) are different values as far as
// operator== is concerned. Arithmetic between surds requires equal radicands.
class QuadraticSurd {
 public:
  // Requires d >= 2, and d not a perfect square whenever b != 0.
  QuadraticSurd(Rational a, Rational b, Integer d);

  // a + 0*sqrt(d).
  static QuadraticSurd rational(Rational a, Integer d);
  // 0 + 1*sqrt(d).
  static QuadraticSurd root(Integer d);

  // Inverse of to_string(): "a", "b*sqrt(d)", "a+b*sqrt(d)", "a-sqrt(d)", ...
  // A bare rational has no radicand, so `default_d` supplies one.
  static QuadraticSurd parse(std::string_view text, const Integer& default_d = 2);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Integer& d() const noexcept { return d_; }

  QuadraticSurd conjugate() const;
  // a^2 - d*b^2
  Rational norm() const;
  // Exact sign of the real number a + b*sqrt(d).
  int sign() const;

  QuadraticSurd pow(unsigned long exponent) const;

  std::string to_string() const;
  // Truncated toward zero after `digits` places; exact, not a float render.
  std::string to_decimal(int digits) const;
  double to_double() const;

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

 private:
  Rational a_;
  Rational b_;
  Integer d_;
};

// (a1 + b1 sqrt d)(a2 + b2 sqrt d) = (a1 a2 + b1 b2 d) + (a1 b2 + a2 b1) sqrt d.
// Throws std::domain_error when the radicands differ.
QuadraticSurd surd_mul(const QuadraticSurd& x, const QuadraticSurd& y);
QuadraticSurd surd_add(const QuadraticSurd& x, const QuadraticSurd& y);
QuadraticSurd surd_sub(const QuadraticSurd& x, const QuadraticSurd& y);

inline QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  return surd_mul(x, y);
}
inline QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  return surd_add(x, y);
}
inline QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
  return surd_sub(x, y);
}
QuadraticSurd operator*(const Rational& scalar, const QuadraticSurd& x);

// Three-way comparison of the real values; radicands must match.
int compare(const QuadraticSurd& x, const QuadraticSurd& y);
int compare(const QuadraticSurd& x, const Rational& y);

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& value);

}  // namespace lorentz
