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

#include "lorentz/errors.hpp"
#include "lorentz/integer.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/surd.hpp"

namespace lorentz {

// Positive integer solution of m^2 - n*p = 1 with m >= 2. Such a triple is
// exactly the data of an integral unimodular boost matrix
//
//   [[ m, -n],
//    [-p,  m]]
//
// and every Triple object satisfies the equation; construct one with
// triple_check() or one of the factories below.
class Triple {
 public:
  const Integer& m() const noexcept { return m_; }
  const Integer& n() const noexcept { return n_; }
  const Integer& p() const noexcept { return p_; }

  friend bool operator==(const Triple&, const Triple&) = default;

  // Componentwise strict order: every coordinate strictly smaller.
  friend bool precedes(const Triple& a, const Triple& b) {
    return a.m_ < b.m_ && a.n_ < b.n_ && a.p_ < b.p_;
  }

 private:
  friend Triple triple_check(Integer m, Integer n, Integer p);
  Triple(Integer m, Integer n, Integer p)
      : m_(std::move(m)), n_(std::move(n)), p_(std::move(p)) {}

  Integer m_;
  Integer n_;
  Integer p_;
};

// Throws TripleError naming the first violated condition, checked in the
// order m >= 2, n >= 1, p >= 1, m^2 - np = 1. Coprimality of (m, n) and
// (m, p) follows from the equation and is asserted as a logic_error.
Triple triple_check(Integer m, Integer n, Integer p);

// Admissible (V, c) for a triple: V = n/m and c^2 = n/p. The light speed
// itself is irrational and kept as c = sqrt(m^2 - 1) / p.
struct ParamPair {
  Rational V;
  Rational c_squared;
  Integer c_radicand;     // m^2 - 1 == n*p
  Integer c_denominator;  // p

  QuadraticSurd c() const;
};

ParamPair pair_from_triple(const Triple& t);

// V = n/m in lowest terms is admissible iff m >= 2 and n | m^2 - 1.
// Requires V > 0 (std::domain_error); inadmissible V throws Inadmissible.
Triple triple_from_V(const Rational& V);

// Inverse of pair_from_triple through m = 1/sqrt(1 - V^2/c^2), n = mV,
// p = mV/c^2. Requires 0 < V^2 < c^2 (std::domain_error) and throws
// Inadmissible when any of these fails to be an integer.
Triple mnp_from_pair(const Rational& V, const Rational& c_squared);

// True iff sqrt(c_squared) is irrational, i.e. N*P is not a perfect square
// for c^2 = N/P in lowest terms. Requires c_squared > 0.
bool is_admissible_c(const Rational& c_squared);

// c = sqrt(N*P) / P for c^2 = N/P in lowest terms. Requires an admissible c^2.
QuadraticSurd light_speed(const Rational& c_squared);

enum class Family {
  kNLarge,  // (m, m^2 - 1, 1): V, c -> infinity
  kPLarge,  // (m, 1, m^2 - 1): V, c -> 0
};

Triple family_triple(const Integer& m, Family family);

}  // namespace lorentz
