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

#include "lorentz/surd.hpp"

#include <cmath>
#include <stdexcept>

namespace lorentz {
namespace {

void require_same_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.d() != y.d()) {
    throw std::domain_error("surd arithmetic with mismatched radicands " +
                            x.d().get_str() + " and " + y.d().get_str());
  }
}

// Term "b*sqrt(d)" with the sign of b carried by the caller.
std::string root_term(const Rational& magnitude, const Integer& d) {
  std::string root = "sqrt(" + d.get_str() + ")";
  if (magnitude == Rational(1)) return root;
  return magnitude.to_string() + "*" + root;
}

}  // namespace

QuadraticSurd::QuadraticSurd(Rational a, Rational b, Integer d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ < 2) throw std::domain_error("surd radicand must be at least 2");
  if (!b_.is_zero() && is_perfect_square(d_)) {
    throw std::domain_error("surd radicand " + d_.get_str() +
                            " is a perfect square");
  }
}

QuadraticSurd QuadraticSurd::rational(Rational a, Integer d) {
  return QuadraticSurd(std::move(a), Rational(0), std::move(d));
}

QuadraticSurd QuadraticSurd::root(Integer d) {
  return QuadraticSurd(Rational(0), Rational(1), std::move(d));
}

QuadraticSurd QuadraticSurd::conjugate() const { return {a_, -b_, d_}; }

Rational QuadraticSurd::norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

int QuadraticSurd::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and b^2 d wins. They cannot tie since
  // d is not a perfect square.
  return a_ * a_ > b_ * b_ * Rational(d_) ? sa : sb;
}

QuadraticSurd QuadraticSurd::pow(unsigned long exponent) const {
  QuadraticSurd result = rational(Rational(1), d_);
  QuadraticSurd base = *this;
  while (exponent != 0) {
    if (exponent & 1UL) result = surd_mul(result, base);
    exponent >>= 1;
    if (exponent != 0) base = surd_mul(base, base);
  }
  return result;
}

std::string QuadraticSurd::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  const std::string root = root_term(b_.abs(), d_);
  if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + root;
  return a_.to_string() + (b_.sign() < 0 ? "-" : "+") + root;
}

std::string QuadraticSurd::to_decimal(int digits) const {
  if (digits < 0) throw std::domain_error("negative digit count");
  if (sign() < 0) {
    return "-" + QuadraticSurd(-a_, -b_, d_).to_decimal(digits);
  }
  const Integer scale = lorentz::pow(Integer(10), static_cast<unsigned long>(digits));
  const Rational scaled_a = a_ * Rational(scale);
  const Rational scaled_b = b_ * Rational(scale);
  // Estimate floor(value * scale), then correct it with exact sign tests.
  const Rational b_sq_d = scaled_b * scaled_b * Rational(d_);
  Integer estimate = scaled_a.floor();
  const Integer root = isqrt(b_sq_d.floor());
  if (scaled_b.sign() >= 0) {
    estimate += root;
  } else {
    estimate -= root + 1;
  }
  const QuadraticSurd scaled(scaled_a, scaled_b, d_);
  auto below = [&](const Integer& k) {
    return compare(scaled, Rational(k)) < 0;
  };
  while (below(estimate)) estimate -= 1;
  while (!below(Integer(estimate + 1))) estimate += 1;
  return Rational(estimate, scale).to_decimal(digits);
}

double QuadraticSurd::to_double() const {
  return a_.to_double() + b_.to_double() * std::sqrt(d_.get_d());
}

QuadraticSurd surd_mul(const QuadraticSurd& x, const QuadraticSurd& y) {
  require_same_radicand(x, y);
  const Rational d(x.d());
  return QuadraticSurd(x.a() * y.a() + x.b() * y.b() * d,
                       x.a() * y.b() + y.a() * x.b(), x.d());
}

QuadraticSurd surd_add(const QuadraticSurd& x, const QuadraticSurd& y) {
  require_same_radicand(x, y);
  return QuadraticSurd(x.a() + y.a(), x.b() + y.b(), x.d());
}

QuadraticSurd surd_sub(const QuadraticSurd& x, const QuadraticSurd& y) {
  require_same_radicand(x, y);
  return QuadraticSurd(x.a() - y.a(), x.b() - y.b(), x.d());
}

QuadraticSurd operator*(const Rational& scalar, const QuadraticSurd& x) {
  return QuadraticSurd(scalar * x.a(), scalar * x.b(), x.d());
}

int compare(const QuadraticSurd& x, const QuadraticSurd& y) {
  return surd_sub(x, y).sign();
}

int compare(const QuadraticSurd& x, const Rational& y) {
  return QuadraticSurd(x.a() - y, x.b(), x.d()).sign();
}

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& value) {
  return os << value.to_string();
}

namespace {

// Splits "a+b*sqrt(d)" at the sign that starts the root term, if any.
struct SurdParts {
  std::string_view rational_part;
  std::string_view root_part;  // includes the leading sign
};

SurdParts split_surd(std::string_view text) {
  const auto sqrt_pos = text.find("sqrt(");
  if (sqrt_pos == std::string_view::npos) return {text, {}};
  std::size_t cut = std::string_view::npos;
  for (std::size_t i = sqrt_pos; i-- > 1;) {
    if (text[i] == '+' || text[i] == '-') {
      cut = i;
      break;
    }
  }
  if (cut == std::string_view::npos) return {{}, text};
  return {text.substr(0, cut), text.substr(cut)};
}

}  // namespace

QuadraticSurd QuadraticSurd::parse(std::string_view text,
                                   const Integer& default_d) {
  const auto bad = [&] {
    return std::invalid_argument("malformed surd '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  auto [rational_text, root_text] = split_surd(text);
  if (root_text.empty()) {
    return rational(Rational::parse(rational_text), default_d);
  }
  Rational a = rational_text.empty() ? Rational(0) : Rational::parse(rational_text);

  int sign = 1;
  if (root_text.front() == '+' || root_text.front() == '-') {
    sign = root_text.front() == '-' ? -1 : 1;
    root_text.remove_prefix(1);
  }
  const auto open = root_text.find("sqrt(");
  if (root_text.empty() || root_text.back() != ')') throw bad();
  Rational b(1);
  if (open != 0) {
    if (open < 2 || root_text[open - 1] != '*') throw bad();
    b = Rational::parse(root_text.substr(0, open - 1));
    if (b.sign() <= 0) throw bad();
  }
  const Integer d = parse_integer(
      root_text.substr(open + 5, root_text.size() - open - 6));
  return QuadraticSurd(std::move(a), sign < 0 ? -b : b, d);
}

}  // namespace lorentz
