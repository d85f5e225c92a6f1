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

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

#include "lorentz/integer.hpp"

namespace lorentz {

// Exact fraction in lowest terms. The denominator is always positive, the
// sign lives in the numerator and zero is 0/1, so equality is componentwise.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT
  // Throws std::domain_error when den == 0.
  Rational(Integer num, Integer den);

  // Accepts "N/P" or a bare integer "N"; decimals and whitespace are
  // rejected with std::invalid_argument.
  static Rational parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  int sign() const noexcept { return sgn(num_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational abs() const;
  Rational reciprocal() const;  // throws std::domain_error on zero
  Integer floor() const;
  // Fractional part in [0, 1).
  Rational frac() const;

  // "N/P", or "N" when the denominator is 1.
  std::string to_string() const;
  // Decimal expansion truncated toward zero after `digits` places.
  std::string to_decimal(int digits) const;
  double to_double() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) {
    return lhs += rhs;
  }
  friend Rational operator-(Rational lhs, const Rational& rhs) {
    return lhs -= rhs;
  }
  friend Rational operator*(Rational lhs, const Rational& rhs) {
    return lhs *= rhs;
  }
  friend Rational operator/(Rational lhs, const Rational& rhs) {
    return lhs /= rhs;
  }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  struct Canonical {};
  Rational(Integer num, Integer den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

struct RationalHash {
  std::size_t operator()(const Rational& value) const noexcept;
};

}  // namespace lorentz
