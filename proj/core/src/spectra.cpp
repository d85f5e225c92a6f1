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

#include "lorentz/spectra.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "lorentz/pell.hpp"

namespace lorentz {

Triple minimal_triple(const Rational& c_squared) {
  if (!is_admissible_c(c_squared)) {
    throw std::domain_error("c^2 = " + c_squared.to_string() +
                            " has a rational square root");
  }
  const Integer& n_star = c_squared.num();
  const Integer& p_star = c_squared.den();
  const PellSolution base = pell_min_solution(Integer(n_star * p_star));
  return triple_check(base.x(), Integer(base.y() * n_star),
                      Integer(base.y() * p_star));
}

Spectrum spectrum(const Rational& c_squared, std::size_t count) {
  if (count == 0) throw std::domain_error("spectrum count must be >= 1");
  const Triple first = minimal_triple(c_squared);
  Spectrum s{c_squared, c_squared.num(), c_squared.den(), {}};
  s.terms.reserve(count);

  const Integer& m1 = first.m();
  const Integer& n1 = first.n();
  const Integer& p1 = first.p();
  Integer m = 1;
  Integer p = 0;
  for (std::size_t k = 1; k <= count; ++k) {
    Integer next_m = m1 * m + n1 * p;  // c^2 p1 == n1
    Integer next_p = m1 * p + p1 * m;
    m = std::move(next_m);
    p = std::move(next_p);

    const Integer m2_minus_1 = m * m - 1;
    if (!mpz_divisible_p(m2_minus_1.get_mpz_t(), p.get_mpz_t())) {
      throw std::logic_error("spectrum recurrence lost divisibility at k = " +
                             std::to_string(k));
    }
    Integer n;
    mpz_divexact(n.get_mpz_t(), m2_minus_1.get_mpz_t(), p.get_mpz_t());
    Triple t = triple_check(m, std::move(n), p);
    Rational V(t.n(), t.m());
    Rational gap = c_squared - V * V;
    s.terms.push_back({k, std::move(t), std::move(V), std::move(gap)});
  }
  return s;
}

std::vector<Rational> signed_values(const Spectrum& s) {
  std::vector<Rational> out;
  out.reserve(2 * s.terms.size());
  for (auto it = s.terms.rbegin(); it != s.terms.rend(); ++it) {
    out.push_back(-it->V);
  }
  for (const auto& term : s.terms) out.push_back(term.V);
  return out;
}

std::vector<Rational> accumulation_report(const Spectrum& s) {
  if (s.terms.empty()) throw std::domain_error("empty spectrum");
  std::vector<Rational> out;
  out.reserve(s.terms.size());
  for (const auto& term : s.terms) out.push_back(s.c_squared - term.V * term.V);
  return out;
}

namespace {

void add_factors(std::uint64_t value, std::map<std::uint64_t, int>& into) {
  for (std::uint64_t f = 2; f * f <= value; ++f) {
    while (value % f == 0) {
      ++into[f];
      value /= f;
    }
  }
  if (value > 1) ++into[value];
}

std::vector<std::uint64_t> divisors(const std::map<std::uint64_t, int>& factors) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [prime, exponent] : factors) {
    const std::size_t existing = out.size();
    std::uint64_t power = 1;
    for (int e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  return out;
}

}  // namespace

std::map<Rational, std::vector<Triple>> brute_force_spectra(std::int64_t m_max) {
  if (m_max < 2) throw std::domain_error("m_max must be at least 2");
  if (m_max > (std::int64_t{1} << 31)) {
    throw std::domain_error("m_max too large for divisor enumeration");
  }
  std::map<Rational, std::vector<Triple>> groups;
  for (std::uint64_t m = 2; m <= static_cast<std::uint64_t>(m_max); ++m) {
    // m^2 - 1 = (m - 1)(m + 1)
    std::map<std::uint64_t, int> factors;
    add_factors(m - 1, factors);
    add_factors(m + 1, factors);
    const std::uint64_t product = m * m - 1;
    for (std::uint64_t n : divisors(factors)) {
      const std::uint64_t p = product / n;
      const Integer mm(static_cast<unsigned long>(m));
      const Integer nn(static_cast<unsigned long>(n));
      const Integer pp(static_cast<unsigned long>(p));
      groups[Rational(nn, pp)].push_back(triple_check(mm, nn, pp));
    }
  }
  for (auto& [c_squared, triples] : groups) {
    std::sort(triples.begin(), triples.end(),
              [](const Triple& a, const Triple& b) { return a.m() < b.m(); });
  }
  return groups;
}

}  // namespace lorentz
