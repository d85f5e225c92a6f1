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

#include "lorentz/params.hpp"

#include <stdexcept>

namespace lorentz {

Triple triple_check(Integer m, Integer n, Integer p) {
  if (m < 2) throw TripleError(TripleFault::kMBelowTwo);
  if (sgn(n) <= 0) throw TripleError(TripleFault::kNonPositiveN);
  if (sgn(p) <= 0) throw TripleError(TripleFault::kNonPositiveP);
  if (m * m - n * p != 1) throw TripleError(TripleFault::kEquation);
  if (gcd(m, n) != 1 || gcd(m, p) != 1) {
    throw std::logic_error("solution of m^2 - np = 1 with gcd(m, np) != 1");
  }
  return Triple(std::move(m), std::move(n), std::move(p));
}

QuadraticSurd ParamPair::c() const {
  return QuadraticSurd(Rational(0), Rational(Integer(1), c_denominator),
                       c_radicand);
}

ParamPair pair_from_triple(const Triple& t) {
  ParamPair pair{Rational(t.n(), t.m()), Rational(t.n(), t.p()),
                 Integer(t.n() * t.p()), t.p()};
  // np = m^2 - 1 sits strictly between (m-1)^2 and m^2, so c is irrational,
  // and V^2 < c^2 reduces to np < m^2.
  if (is_perfect_square(pair.c_radicand) ||
      !(pair.V * pair.V < pair.c_squared)) {
    throw std::logic_error("triple produced an inadmissible parameter pair");
  }
  return pair;
}

Triple triple_from_V(const Rational& V) {
  if (V.sign() <= 0) throw std::domain_error("relative speed must be positive");
  const Integer& n = V.num();
  const Integer& m = V.den();
  if (m < 2) throw Inadmissible(Criterion::kDenominatorBelowTwo);
  const Integer m2_minus_1 = m * m - 1;
  if (sgn(Integer(m2_minus_1 % n)) != 0) {
    throw Inadmissible(Criterion::kNDoesNotDivide);
  }
  return triple_check(m, n, m2_minus_1 / n);
}

Triple mnp_from_pair(const Rational& V, const Rational& c_squared) {
  const Rational v2 = V * V;
  if (V.sign() <= 0 || !(v2 < c_squared)) {
    throw std::domain_error("pair must satisfy 0 < V < c");
  }
  // m^2 = 1 / (1 - V^2/c^2)
  const Rational m_squared = (Rational(1) - v2 / c_squared).reciprocal();
  if (!m_squared.is_integer() || !is_perfect_square(m_squared.num())) {
    throw Inadmissible(Criterion::kGammaNotPerfectSquare);
  }
  const Integer m = isqrt(m_squared.num());
  const Rational n = Rational(m) * V;
  const Rational p = n / c_squared;
  if (!n.is_integer() || !p.is_integer()) {
    throw Inadmissible(Criterion::kNonIntegralEntries);
  }
  return triple_check(m, n.num(), p.num());
}

bool is_admissible_c(const Rational& c_squared) {
  if (c_squared.sign() <= 0) {
    throw std::domain_error("squared light speed must be positive");
  }
  return !is_perfect_square(Integer(c_squared.num() * c_squared.den()));
}

QuadraticSurd light_speed(const Rational& c_squared) {
  if (!is_admissible_c(c_squared)) throw Inadmissible(Criterion::kRationalLightSpeed);
  return QuadraticSurd(Rational(0), Rational(Integer(1), c_squared.den()),
                       Integer(c_squared.num() * c_squared.den()));
}

Triple family_triple(const Integer& m, Family family) {
  if (m < 2) throw std::domain_error("family index m must be at least 2");
  const Integer big = m * m - 1;
  return family == Family::kNLarge ? triple_check(m, big, 1)
                                   : triple_check(m, 1, big);
}

}  // namespace lorentz
