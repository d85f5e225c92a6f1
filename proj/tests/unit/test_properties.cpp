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

#include "doctest.h"
#include "generators.hpp"
#include "lorentz/torus.hpp"
#include "property.hpp"

namespace lorentz {
namespace {

TEST_CASE("property: Triple -> ParamPair -> Triple is the identity") {
  testing::for_all(1000, [](testing::Gen& g, std::size_t) {
    const Triple t = testing::any_triple(g);
    const ParamPair pair = pair_from_triple(t);
    CHECK(mnp_from_pair(pair.V, pair.c_squared) == t);
    CHECK(triple_from_V(pair.V) == t);
    CHECK(pair.c_squared * Rational(pair.c_denominator * pair.c_denominator) ==
          Rational(t.m() * t.m() - 1));
  });
}

TEST_CASE("property: spectra are strictly ordered") {
  testing::for_all(1000, [](testing::Gen& g, std::size_t) {
    const Rational c2 = testing::admissible_c_squared(g, 60);
    const Spectrum s = spectrum(c2, static_cast<std::size_t>(g.uniform(2, 8)));
    for (std::size_t i = 1; i < s.terms.size(); ++i) {
      CHECK(precedes(s.terms[i - 1].triple, s.terms[i].triple));
      CHECK(s.terms[i - 1].V < s.terms[i].V);
    }
  });
}

TEST_CASE("property: rational orbits close after exactly period_of steps") {
  testing::for_all(1000, [](testing::Gen& g, std::size_t) {
    const TorusAutomorphism M =
        matrix_from_triple(testing::small_triple(g, 200));
    const RationalPoint start = testing::rational_point(g, 30);
    const auto den = start.common_denominator().get_ui();
    const auto period = period_of(M, start, den * den);
    RationalPoint cur = start;
    for (std::uint64_t k = 1; k <= period; ++k) {
      cur = apply_point(M, cur);
      if (k < period) CHECK_FALSE(cur == start);
    }
    CHECK(cur == start);
  });
}

TEST_CASE("property: triple matrices are Anosov with exact eigen-structure") {
  testing::for_all(1000, [](testing::Gen& g, std::size_t) {
    const Triple t = testing::any_triple(g);
    const TorusAutomorphism M = matrix_from_triple(t);
    CHECK(M.determinant() == 1);
    CHECK(is_anosov(M));
    const EigenData e = eigen(t);
    const Integer d = t.n() * t.p();
    CHECK(e.lambda1 * e.lambda2 == QuadraticSurd::rational(Rational(1), d));
    CHECK(e.lambda1 + e.lambda2 ==
          QuadraticSurd::rational(Rational(2 * t.m()), d));
    const auto zero = QuadraticSurd::rational(Rational(0), d);
    const auto [s1, s2] = eigen_residual(M, e.lambda1, e.stable_dir);
    const auto [u1, u2] = eigen_residual(M, e.lambda2, e.unstable_dir);
    CHECK(s1 == zero);
    CHECK(s2 == zero);
    CHECK(u1 == zero);
    CHECK(u2 == zero);
  });
}

}  // namespace
}  // namespace lorentz
