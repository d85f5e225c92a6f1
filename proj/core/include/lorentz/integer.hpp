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

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace lorentz {

// Arbitrary-precision signed integer. Spectrum terms grow geometrically in
// the index, so nothing in the core is allowed to use fixed-width arithmetic
// for m, n, p, d or convergents.
using Integer = mpz_class;

// Greatest common divisor, always >= 0; gcd(0, 0) == 0.
Integer gcd(const Integer& a, const Integer& b);

// floor(sqrt(n)). Throws std::domain_error for n < 0.
Integer isqrt(const Integer& n);

// True iff n >= 0 and n is the square of an integer.
bool is_perfect_square(const Integer& n);

// Floor division and the matching non-negative remainder (den > 0).
Integer floor_div(const Integer& num, const Integer& den);
Integer floor_mod(const Integer& num, const Integer& den);

Integer pow(const Integer& base, unsigned long exponent);

// Parses an optionally signed run of decimal digits. Whitespace, a leading
// '+', and anything else are rejected with std::invalid_argument.
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& value) { return value.get_str(); }

struct IntegerHash {
  std::size_t operator()(const Integer& value) const noexcept;
};

}  // namespace lorentz
