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

#include "lorentz/pell.hpp"

#include <stdexcept>
#include <string>

namespace lorentz {
namespace {

bool satisfies(const Integer& x, const Integer& y, const Integer& d) {
  return x * x - d * y * y == 1;
}

void require_nonsquare(const Integer& d) {
  if (d < 2) {
    throw std::domain_error("Pell radicand must be at least 2, got " +
                            d.get_str());
  }
  if (is_perfect_square(d)) {
    throw std::domain_error("Pell radicand " + d.get_str() +
                            " is a perfect square");
  }
}

}  // namespace

const Integer& CFExpansion::term(std::size_t i) const {
  if (i == 0) return a0;
  return period[(i - 1) % period.size()];
}

PellSolution::PellSolution(Integer x, Integer y, Integer d)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(d)) {
  if (x_ < 1 || y_ < 0 || !satisfies(x_, y_, d_)) {
    throw std::logic_error("(" + x_.get_str() + ", " + y_.get_str() +
                           ") does not solve x^2 - " + d_.get_str() +
                           "y^2 = 1");
  }
}

CFExpansion cf_sqrt(const Integer& d) {
  require_nonsquare(d);
  CFExpansion cf{d, isqrt(d), {}};
  const Integer twice_a0 = 2 * cf.a0;
  // Classical state recurrence (m_i, q_i, a_i) for (sqrt(d) + m_i) / q_i.
  Integer m = 0;
  Integer q = 1;
  Integer a = cf.a0;
  do {
    m = q * a - m;
    q = (d - m * m) / q;
    a = (cf.a0 + m) / q;
    cf.period.push_back(a);
  } while (a != twice_a0);
  return cf;
}

std::vector<Convergent> convergents(const CFExpansion& cf, std::size_t count) {
  if (count == 0) throw std::domain_error("convergent count must be >= 1");
  std::vector<Convergent> out;
  out.reserve(count);
  Integer p_prev = 1, q_prev = 0;
  Integer p = cf.a0, q = 1;
  out.push_back({p, q, 0});
  for (std::size_t i = 1; i < count; ++i) {
    const Integer& a = cf.term(i);
    Integer p_next = a * p + p_prev;
    Integer q_next = a * q + q_prev;
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
    out.push_back({p, q, i});
  }
  return out;
}

std::size_t fundamental_index(const CFExpansion& cf) {
  const std::size_t s = cf.period.size();
  return s % 2 == 0 ? s - 1 : 2 * s - 1;
}

PellSolution pell_min_solution(const Integer& d) {
  const CFExpansion cf = cf_sqrt(d);
  const std::size_t index = fundamental_index(cf);
  auto conv = convergents(cf, index + 1);
  const Convergent& c = conv.back();
  if (satisfies(c.P, c.Q, d)) return PellSolution(c.P, c.Q, d);

  // Not reachable if the parity rule holds; scan onwards instead of failing.
  for (std::size_t count = index + 2;; ++count) {
    conv = convergents(cf, count);
    if (satisfies(conv.back().P, conv.back().Q, d)) {
      return PellSolution(conv.back().P, conv.back().Q, d);
    }
  }
}

std::vector<PellSolution> pell_solutions(const Integer& d, std::size_t count) {
  const PellSolution base = pell_min_solution(d);
  std::vector<PellSolution> out;
  out.reserve(count);
  Integer x = base.x(), y = base.y();
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) {
      Integer nx = base.x() * x + d * base.y() * y;
      Integer ny = base.y() * x + base.x() * y;
      x = std::move(nx);
      y = std::move(ny);
    }
    out.emplace_back(x, y, d);
  }
  return out;
}

bool on_conic(const ConicPoint& s, const Rational& dsq) {
  return s.x * s.x - dsq * s.y * s.y == Rational(1);
}

namespace {

ConicPoint compose_unchecked(const ConicPoint& s, const ConicPoint& t,
                             const Rational& dsq) {
  return {s.x * t.x + dsq * s.y * t.y, s.y * t.x + s.x * t.y};
}

void require_on_conic(const ConicPoint& s, const Rational& dsq) {
  if (!on_conic(s, dsq)) {
    throw std::domain_error("(" + s.x.to_string() + ", " + s.y.to_string() +
                            ") is not a solution of x^2 - " + dsq.to_string() +
                            "*y^2 = 1");
  }
}

}  // namespace

ConicPoint pell_compose(const ConicPoint& s, const ConicPoint& t,
                        const Rational& dsq) {
  require_on_conic(s, dsq);
  require_on_conic(t, dsq);
  return compose_unchecked(s, t, dsq);
}

ConicPoint pell_power(const ConicPoint& s, std::int64_t k,
                      const Rational& dsq) {
  if (k < 0) throw std::domain_error("negative composition power");
  require_on_conic(s, dsq);
  ConicPoint acc{Rational(1), Rational(0)};
  for (std::int64_t i = 0; i < k; ++i) acc = compose_unchecked(s, acc, dsq);
  return acc;
}

ConicPoint pell_power_binary(const ConicPoint& s, std::int64_t k,
                             const Rational& dsq) {
  if (k < 0) throw std::domain_error("negative composition power");
  require_on_conic(s, dsq);
  ConicPoint acc{Rational(1), Rational(0)};
  ConicPoint base = s;
  while (k != 0) {
    if (k & 1) acc = compose_unchecked(acc, base, dsq);
    k >>= 1;
    if (k != 0) base = compose_unchecked(base, base, dsq);
  }
  return acc;
}

}  // namespace lorentz
