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

#include <numeric>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "lorentz/params.hpp"
#include "oracles.hpp"

namespace lorentz {
namespace {

Rational q(const char* text) { return Rational::parse(text); }

TripleFault fault_of(long m, long n, long p) {
  try {
    triple_check(m, n, p);
  } catch (const TripleError& e) {
    return e.fault();
  }
  FAIL("expected TripleError");
  return TripleFault::kEquation;
}

Criterion criterion_of(auto&& fn) {
  try {
    fn();
  } catch (const Inadmissible& e) {
    return e.criterion();
  }
  FAIL("expected Inadmissible");
  return Criterion::kRationalLightSpeed;
}

TEST_CASE("triple_check") {
  CHECK_NOTHROW(triple_check(3, 2, 4));
  CHECK_NOTHROW(triple_check(2, 3, 1));
  CHECK(fault_of(3, 2, 5) == TripleFault::kEquation);
  CHECK(fault_of(1, 0, 0) == TripleFault::kMBelowTwo);
  CHECK(fault_of(3, 0, 4) == TripleFault::kNonPositiveN);
  CHECK(fault_of(3, -2, -4) == TripleFault::kNonPositiveN);
  CHECK(fault_of(3, 2, 0) == TripleFault::kNonPositiveP);
}

TEST_CASE("pair_from_triple") {
  auto pair = pair_from_triple(triple_check(3, 2, 4));
  CHECK(pair.V == q("2/3"));
  CHECK(pair.c_squared == q("1/2"));
  CHECK(pair.c_radicand == 8);
  CHECK(pair.c_denominator == 4);
  CHECK(pair.c().to_string() == "1/4*sqrt(8)");

  pair = pair_from_triple(triple_check(2, 3, 1));
  CHECK(pair.V == q("3/2"));
  CHECK(pair.c_squared == q("3"));

  pair = pair_from_triple(triple_check(2, 1, 3));
  CHECK(pair.V == q("1/2"));
  CHECK(pair.c_squared == q("1/3"));
  // c = sqrt(3)/3 = 1/sqrt(3), not 1/3.
  CHECK(pair.c().to_decimal(6) == "0.577350");
}

TEST_CASE("triple_from_V") {
  CHECK(triple_from_V(q("2/3")) == triple_check(3, 2, 4));
  CHECK(triple_from_V(q("4/3")) == triple_check(3, 4, 2));
  CHECK(criterion_of([] { triple_from_V(q("5/3")); }) ==
        Criterion::kNDoesNotDivide);
  CHECK(criterion_of([] { triple_from_V(q("3")); }) ==
        Criterion::kDenominatorBelowTwo);
  CHECK_THROWS_AS(triple_from_V(q("-2/3")), std::domain_error);
  CHECK_THROWS_AS(triple_from_V(q("0")), std::domain_error);
}

TEST_CASE("mnp_from_pair") {
  CHECK(mnp_from_pair(q("2/3"), q("1/2")) == triple_check(3, 2, 4));
  CHECK(mnp_from_pair(q("1/2"), q("1/3")) == triple_check(2, 1, 3));
  CHECK(criterion_of([] { mnp_from_pair(q("1/2"), q("1/2")); }) ==
        Criterion::kGammaNotPerfectSquare);
  CHECK_THROWS_AS(mnp_from_pair(q("1"), q("1")), std::domain_error);
  CHECK_THROWS_AS(mnp_from_pair(q("0"), q("1")), std::domain_error);
}

TEST_CASE("mnp_from_pair detects non-integral entries") {
  // 1 - V^2/c^2 = 1/4 with V = 1/4 gives c^2 = 1/12, m = 2, n = 1/2.
  CHECK(criterion_of([] { mnp_from_pair(q("1/4"), q("1/12")); }) ==
        Criterion::kNonIntegralEntries);
}

TEST_CASE("is_admissible_c") {
  CHECK(is_admissible_c(q("1/2")));
  CHECK_FALSE(is_admissible_c(q("4/9")));
  CHECK(is_admissible_c(q("2")));
  CHECK_FALSE(is_admissible_c(q("9")));
  CHECK(is_admissible_c(q("2/8") + q("1/4")));  // 1/2
  CHECK_THROWS_AS(is_admissible_c(q("0")), std::domain_error);
  CHECK_THROWS_AS(is_admissible_c(q("-2")), std::domain_error);
}

TEST_CASE("family_triple") {
  CHECK(family_triple(2, Family::kNLarge) == triple_check(2, 3, 1));
  CHECK(family_triple(3, Family::kPLarge) == triple_check(3, 1, 8));
  CHECK_THROWS_AS(family_triple(1, Family::kNLarge), std::domain_error);
}

TEST_CASE("every brute-force triple round-trips and is reachable from V") {
  const auto triples = testing::brute_triples(100);
  std::set<std::pair<unsigned long, unsigned long>> seen_v;
  for (const auto& s : triples) {
    const Triple t = triple_check(static_cast<unsigned long>(s.m),
                                  static_cast<unsigned long>(s.n),
                                  static_cast<unsigned long>(s.p));
    const ParamPair pair = pair_from_triple(t);
    CHECK(mnp_from_pair(pair.V, pair.c_squared) == t);
    CHECK(triple_from_V(pair.V) == t);
    CHECK(pair.V * pair.V < pair.c_squared);
    CHECK_FALSE(is_perfect_square(pair.c_radicand));
    CHECK(seen_v.emplace(s.n, s.m).second);
  }
  // Conversely every n/m with m <= 100 that triple_from_V accepts is in the
  // brute-force list.
  std::size_t accepted = 0;
  for (unsigned long m = 2; m <= 100; ++m) {
    for (unsigned long n = 1; n <= m * m - 1; ++n) {
      if (std::gcd(m, n) != 1) continue;
      try {
        triple_from_V(Rational(Integer(n), Integer(m)));
        ++accepted;
        CHECK(seen_v.count({n, m}) == 1);
      } catch (const Inadmissible&) {
      }
    }
  }
  CHECK(accepted == triples.size());
}

}  // namespace
}  // namespace lorentz
