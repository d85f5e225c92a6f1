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

#include "lorentz/rational.hpp"

#include <stdexcept>

namespace lorentz {

Rational::Rational(Integer num, Integer den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (sgn(den_) == 0) throw std::domain_error("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (sgn(num_) == 0) {
    den_ = 1;
    return;
  }
  Integer g = gcd(num_, den_);
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') {
    throw std::invalid_argument("denominator must be unsigned in '" +
                                std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (sgn(den) == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  return Rational(std::move(num), std::move(den));
}

Rational Rational::abs() const {
  return Rational(lorentz::Integer(::abs(num_)), den_, Canonical{});
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rational(den_, num_);
}

Integer Rational::floor() const { return floor_div(num_, den_); }

Rational Rational::frac() const {
  return Rational(floor_mod(num_, den_), den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) throw std::domain_error("negative digit count");
  Integer magnitude = ::abs(num_);
  Integer scaled = magnitude * pow(Integer(10), static_cast<unsigned long>(digits));
  Integer truncated = floor_div(scaled, den_);
  std::string body = truncated.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sign() < 0) body.insert(0, "-");
  return body;
}

double Rational::to_double() const {
  mpq_t q;
  mpq_init(q);
  mpq_set_num(q, num_.get_mpz_t());
  mpq_set_den(q, den_.get_mpz_t());
  const double result = mpq_get_d(q);
  mpq_clear(q);
  return result;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

Rational Rational::operator-() const {
  return Rational(Integer(-num_), den_, Canonical{});
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(Integer(a.num_ * b.den_), Integer(b.num_ * a.den_));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

std::size_t RationalHash::operator()(const Rational& value) const noexcept {
  const IntegerHash h;
  return h(value.num()) * 31 + h(value.den());
}

}  // namespace lorentz
