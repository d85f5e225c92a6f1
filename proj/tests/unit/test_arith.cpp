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

#include <stdexcept>

#include "doctest.h"
#include "lorentz/integer.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/surd.hpp"
#include "property.hpp"

namespace lorentz {
namespace {

QuadraticSurd S(long a, long b, long d) {
  return QuadraticSurd(Rational(a), Rational(b), Integer(d));
}

TEST_CASE("gcd") {
  CHECK(gcd(12, 8) == 4);
  CHECK(gcd(3, 2) == 1);
  CHECK(gcd(0, 7) == 7);
  CHECK(gcd(0, 0) == 0);
  CHECK(gcd(-12, 8) == 4);
}

TEST_CASE("isqrt") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(8) == 2);
  CHECK(isqrt(289) == 17);
  CHECK_THROWS_AS(isqrt(-1), std::domain_error);
  const Integer big = pow(Integer(10), 80) + 12345;
  const Integer r = isqrt(big);
  CHECK(r * r <= big);
  CHECK((r + 1) * (r + 1) > big);
}

TEST_CASE("is_perfect_square") {
  CHECK(is_perfect_square(4));
  CHECK_FALSE(is_perfect_square(2));
  CHECK_FALSE(is_perfect_square(-4));
  CHECK(is_perfect_square(0));
}

TEST_CASE("parse_integer rejects junk") {
  CHECK(parse_integer("-42") == -42);
  CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer("-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer("+3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer(" 7"), std::invalid_argument);
}

TEST_CASE("rational canonical form") {
  const Rational r(Integer(4), Integer(-6));
  CHECK(r.num() == -2);
  CHECK(r.den() == 3);
  CHECK(Rational(Integer(0), Integer(-5)).den() == 1);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
  CHECK(Rational(Integer(2), Integer(4)) == Rational(Integer(1), Integer(2)));
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("2/3") == Rational(Integer(2), Integer(3)));
  CHECK(Rational::parse("-4/6") == Rational(Integer(-2), Integer(3)));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
}

TEST_CASE("rational arithmetic, order, mod 1") {
  const Rational half = Rational::parse("1/2");
  const Rational third = Rational::parse("1/3");
  CHECK(half + third == Rational::parse("5/6"));
  CHECK(half - third == Rational::parse("1/6"));
  CHECK(half * third == Rational::parse("1/6"));
  CHECK(half / third == Rational::parse("3/2"));
  CHECK(third < half);
  CHECK(-half < third);
  CHECK(Rational::parse("-2/3").frac() == third);
  CHECK(Rational::parse("-2/3").floor() == -1);
  CHECK(Rational::parse("7/3").frac() == third);
  CHECK_THROWS_AS(half / Rational(0), std::domain_error);
}

TEST_CASE("rational decimal rendering truncates") {
  CHECK(Rational::parse("2/3").to_decimal(5) == "0.66666");
  CHECK(Rational::parse("-1/8").to_decimal(3) == "-0.125");
  CHECK(Rational::parse("-1/8").to_decimal(2) == "-0.12");
  CHECK(Rational(7).to_decimal(0) == "7");
  CHECK(Rational::parse("1/1000").to_decimal(2) == "0.00");
}

TEST_CASE("surd_mul examples") {
  CHECK(surd_mul(S(3, 2, 2), S(3, 2, 2)) == S(17, 12, 2));
  const QuadraticSurd x(Rational::parse("1/2"), Rational::parse("-3/4"),
                        Integer(7));
  CHECK(surd_mul(x, QuadraticSurd::rational(Rational(1), 7)) == x);
  CHECK(surd_mul(S(3, 2, 2), S(3, -2, 2)) == S(1, 0, 2));
  CHECK_THROWS_AS(surd_mul(S(1, 1, 2), S(1, 1, 3)), std::domain_error);
}

TEST_CASE("surd construction guards") {
  CHECK_THROWS_AS(S(1, 1, 4), std::domain_error);
  CHECK_THROWS_AS(S(1, 1, 1), std::domain_error);
  CHECK_NOTHROW(S(1, 0, 4));
}

TEST_CASE("surd sign, compare, decimals") {
  CHECK(S(3, -1, 8).sign() > 0);   // 3 - 2.828...
  CHECK(S(2, -1, 5).sign() < 0);   // 2 - 2.236...
  CHECK(compare(S(3, 1, 8), Rational(5)) > 0);
  CHECK(compare(S(3, -1, 8), Rational(1)) < 0);
  CHECK(QuadraticSurd::root(2).to_decimal(10) == "1.4142135623");
  CHECK(S(3, -1, 8).to_decimal(6) == "0.171572");
  CHECK(S(0, -1, 2).to_decimal(4) == "-1.4142");
  CHECK(QuadraticSurd(Rational(0), Rational::parse("1/2"), 2).to_decimal(8) ==
        "0.70710678");
}

TEST_CASE("surd string round trip") {
  const QuadraticSurd values[] = {
      S(3, 1, 8), S(3, -1, 8), S(0, 1, 2), S(0, -1, 2), S(5, 0, 3),
      QuadraticSurd(Rational::parse("-1/2"), Rational::parse("3/4"), 5),
      QuadraticSurd(Rational::parse("-1/2"), Rational::parse("-3/4"), 5),
  };
  for (const auto& v : values) {
    CAPTURE(v.to_string());
    CHECK(QuadraticSurd::parse(v.to_string(), v.d()) == v);
  }
  CHECK(S(3, 1, 8).to_string() == "3+sqrt(8)");
  CHECK(S(3, -2, 8).to_string() == "3-2*sqrt(8)");
  CHECK_THROWS_AS(QuadraticSurd::parse("3+sqrt(8"), std::invalid_argument);
  CHECK_THROWS_AS(QuadraticSurd::parse("3+2sqrt(8)"), std::invalid_argument);
}

TEST_CASE("surd pow matches repeated multiplication") {
  const QuadraticSurd base = S(2, 1, 3);
  QuadraticSurd acc = QuadraticSurd::rational(Rational(1), 3);
  for (unsigned long k = 0; k <= 12; ++k) {
    CHECK(base.pow(k) == acc);
    acc = surd_mul(acc, base);
  }
}

TEST_CASE("property: gcd divides both arguments and is symmetric") {
  testing::for_all(1000, [](testing::Gen& g, std::size_t) {
    const Integer a = g.integer(-1'000'000, 1'000'000);
    const Integer b = g.integer(-1'000'000, 1'000'000);
    const Integer d = gcd(a, b);
    CHECK(d >= 0);
    CHECK(d == gcd(b, a));
    if (d != 0) {
      CHECK(a % d == 0);
      CHECK(b % d == 0);
    }
  });
}

TEST_CASE("property: isqrt brackets n") {
  testing::for_all(1000, [](testing::Gen& g, std::size_t) {
    const Integer n = g.integer(0, 1'000'000'000'000LL) * g.integer(1, 1000);
    const Integer r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  });
}

TEST_CASE("property: rational construction is canonical and value-preserving") {
  testing::for_all(1000, [](testing::Gen& g, std::size_t) {
    const Integer num = g.integer(-100000, 100000);
    Integer den = g.integer(-100000, 100000);
    if (den == 0) den = 1;
    const Rational r(num, den);
    CHECK(r.den() > 0);
    CHECK(gcd(r.num(), r.den()) == (r.is_zero() ? r.den() : Integer(1)));
    CHECK(r.num() * den == num * r.den());
    CHECK(Rational::parse(r.to_string()) == r);
  });
}

TEST_CASE("property: surd_mul is commutative and associative") {
  testing::for_all(1000, [](testing::Gen& g, std::size_t) {
    Integer d = g.integer(2, 50);
    if (is_perfect_square(d)) d += 1;
    auto surd = [&] {
      return QuadraticSurd(g.rational(20, 6), g.rational(20, 6), d);
    };
    const QuadraticSurd x = surd(), y = surd(), z = surd();
    CHECK(surd_mul(x, y) == surd_mul(y, x));
    CHECK(surd_mul(surd_mul(x, y), z) == surd_mul(x, surd_mul(y, z)));
    CHECK(surd_mul(x, x.conjugate()).b().is_zero());
    CHECK(surd_mul(x, x.conjugate()).a() == x.norm());
  });
}

}  // namespace
}  // namespace lorentz
