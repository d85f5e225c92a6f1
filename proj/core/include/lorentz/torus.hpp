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

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "lorentz/integer.hpp"
#include "lorentz/params.hpp"
#include "lorentz/rational.hpp"
#include "lorentz/surd.hpp"

namespace lorentz {

// Integer 2x2 matrix acting on R^2/Z^2 in the (x, t) coordinates, row-major.
// The determinant must be +1 or -1, which makes it an automorphism.
class TorusAutomorphism {
 public:
  TorusAutomorphism(Integer a11, Integer a12, Integer a21, Integer a22);

  const Integer& a11() const noexcept { return a11_; }
  const Integer& a12() const noexcept { return a12_; }
  const Integer& a21() const noexcept { return a21_; }
  const Integer& a22() const noexcept { return a22_; }

  Integer determinant() const { return a11_ * a22_ - a12_ * a21_; }
  Integer trace() const { return a11_ + a22_; }
  TorusAutomorphism inverse() const;

  friend bool operator==(const TorusAutomorphism&,
                         const TorusAutomorphism&) = default;

 private:
  Integer a11_, a12_, a21_, a22_;
};

// A point of the torus with rational coordinates in [0, 1).
class RationalPoint {
 public:
  // Throws std::domain_error unless 0 <= x, t < 1.
  RationalPoint(Rational x, Rational t);
  // Reduces both coordinates mod 1.
  static RationalPoint reduced(const Rational& x, const Rational& t);

  const Rational& x() const noexcept { return x_; }
  const Rational& t() const noexcept { return t_; }
  // lcm of the two denominators
  Integer common_denominator() const;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

 private:
  Rational x_;
  Rational t_;
};

// Projective direction with irrational slope dt/dx = slope / sqrt(radicand),
// represented by the vector (sqrt(radicand), slope).
struct EigenDirection {
  Integer slope;
  Integer radicand;

  std::pair<QuadraticSurd, QuadraticSurd> vector() const;
};

struct EigenData {
  QuadraticSurd lambda1;  // m - sqrt(m^2 - 1), in (0, 1)
  QuadraticSurd lambda2;  // m + sqrt(m^2 - 1), > 1
  EigenDirection stable_dir;    // eigenvector of lambda1: (sqrt(np), p) ~ (c, 1)
  EigenDirection unstable_dir;  // eigenvector of lambda2: (sqrt(np), -p) ~ (-c, 1)
};

// [[m, -n], [-p, m]]
TorusAutomorphism matrix_from_triple(const Triple& t);

EigenData eigen(const Triple& t);

// M v - lambda v, computed exactly; (0, 0) for a genuine eigenpair.
std::pair<QuadraticSurd, QuadraticSurd> eigen_residual(
    const TorusAutomorphism& M, const QuadraticSurd& lambda,
    const EigenDirection& dir);

// det = +-1 and |trace| > 2, i.e. no eigenvalue on the unit circle.
bool is_anosov(const TorusAutomorphism& M);

// M * pt mod 1.
RationalPoint apply_point(const TorusAutomorphism& M, const RationalPoint& pt);

// Least k >= 1 with M^k pt == pt. Throws IterationLimit if no return happens
// within max_iter steps (k <= q^2 always holds for common denominator q).
std::uint64_t period_of(const TorusAutomorphism& M, const RationalPoint& pt,
                        std::uint64_t max_iter);

// pt, M pt, ..., M^(period-1) pt.
std::vector<RationalPoint> orbit_cycle(const TorusAutomorphism& M,
                                       const RationalPoint& pt,
                                       std::uint64_t max_iter);

inline constexpr std::size_t kGridSize = 32;

struct OrbitStats {
  // counts[i][j]: visits to the cell [i/32, (i+1)/32) x [j/32, (j+1)/32) in
  // (x, t).
  std::array<std::array<std::uint64_t, kGridSize>, kGridSize> counts{};
  std::size_t visited_cells = 0;
  double occupancy = 0.0;  // visited_cells / 1024
};

// Floating-point orbit of `seed` (x, t) for `steps` points, seed included,
// reduced mod 1 after every step. Diagnostic only.
OrbitStats orbit_sample(const TorusAutomorphism& M,
                        std::pair<double, double> seed, std::uint64_t steps);

}  // namespace lorentz
