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

#include "lorentz/integer.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

#include "lorentz/errors.hpp"

namespace lorentz {

std::string_view describe(TripleFault fault) {
  switch (fault) {
    case TripleFault::kMBelowTwo:
      return "m must be at least 2";
    case TripleFault::kNonPositiveN:
      return "n must be positive";
    case TripleFault::kNonPositiveP:
      return "p must be positive";
    case TripleFault::kEquation:
      return "m²−np ≠ 1";
  }
  return "invalid triple";
}

TripleError::TripleError(TripleFault fault)
    : std::invalid_argument(std::string(describe(fault))), fault_(fault) {}

std::string_view describe(Criterion criterion) {
  switch (criterion) {
    case Criterion::kDenominatorBelowTwo:
      return "denominator m of V = n/m is less than 2";
    case Criterion::kNDoesNotDivide:
      return "n does not divide m²−1";
    case Criterion::kGammaNotPerfectSquare:
      return "1/(1−V²/c²) is not the square of an integer";
    case Criterion::kNonIntegralEntries:
      return "n = mV or p = mV/c² is not an integer";
    case Criterion::kRationalLightSpeed:
      return "c is rational";
  }
  return "inadmissible";
}

Inadmissible::Inadmissible(Criterion criterion)
    : std::invalid_argument(std::string(describe(criterion))),
      criterion_(criterion) {}

Integer gcd(const Integer& a, const Integer& b) {
  Integer result;
  mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt of a negative integer");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return root;
}

bool is_perfect_square(const Integer& n) {
  if (sgn(n) < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer floor_mod(const Integer& num, const Integer& den) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return r;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) {
    throw std::invalid_argument("expected an integer, got '" +
                                std::string(text) + "'");
  }
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("expected an integer, got '" +
                                  std::string(text) + "'");
    }
  }
  return Integer(std::string(text), 10);
}

std::size_t IntegerHash::operator()(const Integer& value) const noexcept {
  const auto* limbs = mpz_limbs_read(value.get_mpz_t());
  const std::size_t size = mpz_size(value.get_mpz_t());
  std::size_t h = std::hash<int>{}(sgn(value));
  for (std::size_t i = 0; i < size; ++i) {
    h ^= std::hash<mp_limb_t>{}(limbs[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

}  // namespace lorentz
