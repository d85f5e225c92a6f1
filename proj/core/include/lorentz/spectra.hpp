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

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "lorentz/integer.hpp"
#include "lorentz/params.hpp"
#include "lorentz/rational.hpp"

namespace lorentz {

struct SpectrumTerm {
  std::size_t k = 0;  // 1-based
  Triple triple;
  Rational V;
  Rational gap_squared;  // c^2 - V_k^2, equal to c^2 / m_k^2
};

// Positive half of the spectrum of c: V_1 < V_2 < ... with c^2 = n* / p*.
struct Spectrum {
  Rational c_squared;
  Integer n_star;
  Integer p_star;
  std::vector<SpectrumTerm> terms;
};

// (m1, y1 n*, y1 p*) where (m1, y1) is the fundamental solution of
// x^2 - n* p* y^2 = 1. Throws std::domain_error if c_squared is inadmissible.
Triple minimal_triple(const Rational& c_squared);

// Terms k = 1..count, generated by
//   m_k = m_1 m_{k-1} + n_1 p_{k-1},  p_k = m_1 p_{k-1} + p_1 m_{k-1},
//   n_k = (m_k^2 - 1) / p_k,
// starting from (m_0, p_0) = (1, 0).
Spectrum spectrum(const Rational& c_squared, std::size_t count);

// The full spectrum as ordered on the line: -V_K, ..., -V_1, V_1, ..., V_K.
std::vector<Rational> signed_values(const Spectrum& s);

// c^2 - V_k^2 for each term; strictly decreasing to zero.
std::vector<Rational> accumulation_report(const Spectrum& s);

// Every triple with 2 <= m <= m_max found by enumerating the divisor pairs
// (n, p) of m^2 - 1, grouped by n/p and sorted by m within each group.
// Independent of the Pell machinery; used as an oracle.
std::map<Rational, std::vector<Triple>> brute_force_spectra(std::int64_t m_max);

}  // namespace lorentz
