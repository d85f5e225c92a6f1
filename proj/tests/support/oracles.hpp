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

// Independent oracles. Nothing here touches GMP or the library's Pell and
// spectrum code paths: machine integers, direct search, explicit iteration.

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace lorentz::testing {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 isqrt_u128(u128 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Least y in [1, y_max] with 1 + d y^2 a square, as (x, y).
inline std::optional<std::pair<u64, u64>> brute_pell_min(u64 d, u64 y_max) {
  for (u64 y = 1; y <= y_max; ++y) {
    const u128 x2 = 1 + static_cast<u128>(d) * y * y;
    const u64 x = isqrt_u128(x2);
    if (static_cast<u128>(x) * x == x2) return std::pair{x, y};
  }
  return std::nullopt;
}

// All (x, y) with y in [1, y_max] solving x^2 - d y^2 = 1.
inline std::vector<std::pair<u64, u64>> brute_pell_all(u64 d, u64 y_max) {
  std::vector<std::pair<u64, u64>> out;
  for (u64 y = 1; y <= y_max; ++y) {
    const u128 x2 = 1 + static_cast<u128>(d) * y * y;
    const u64 x = isqrt_u128(x2);
    if (static_cast<u128>(x) * x == x2) out.emplace_back(x, y);
  }
  return out;
}

struct SmallTriple {
  u64 m, n, p;
  bool operator==(const SmallTriple&) const = default;
};

// Every (m, n, p) with 2 <= m <= m_max and n p = m^2 - 1, by trial of every n.
inline std::vector<SmallTriple> brute_triples(u64 m_max) {
  std::vector<SmallTriple> out;
  for (u64 m = 2; m <= m_max; ++m) {
    const u64 product = m * m - 1;
    for (u64 n = 1; n <= product; ++n) {
      if (product % n == 0) out.push_back({m, n, product / n});
    }
  }
  return out;
}

using Mat2 = std::array<std::int64_t, 4>;

inline std::int64_t mod(std::int64_t a, std::int64_t q) {
  const std::int64_t r = a % q;
  return r < 0 ? r + q : r;
}

// Order of M in GL_2(Z/q) by repeated multiplication.
inline u64 matrix_order_mod(const Mat2& M, std::int64_t q) {
  const Mat2 base{mod(M[0], q), mod(M[1], q), mod(M[2], q), mod(M[3], q)};
  const Mat2 identity{1 % q, 0, 0, 1 % q};
  Mat2 power = base;
  for (u64 k = 1;; ++k) {
    if (power == identity) return k;
    power = {mod(power[0] * base[0] + power[1] * base[2], q),
             mod(power[0] * base[1] + power[1] * base[3], q),
             mod(power[2] * base[0] + power[3] * base[2], q),
             mod(power[2] * base[1] + power[3] * base[3], q)};
  }
}

}  // namespace lorentz::testing
