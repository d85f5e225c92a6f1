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

#include "lorentz/torus.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lorentz/errors.hpp"

namespace lorentz {

TorusAutomorphism::TorusAutomorphism(Integer a11, Integer a12, Integer a21,
                                     Integer a22)
    : a11_(std::move(a11)),
      a12_(std::move(a12)),
      a21_(std::move(a21)),
      a22_(std::move(a22)) {
  const Integer det = determinant();
  if (det != 1 && det != -1) {
    throw std::domain_error("matrix determinant " + det.get_str() +
                            " is not +-1");
  }
}

TorusAutomorphism TorusAutomorphism::inverse() const {
  const Integer det = determinant();
  return TorusAutomorphism(det * a22_, -det * a12_, -det * a21_, det * a11_);
}

RationalPoint::RationalPoint(Rational x, Rational t)
    : x_(std::move(x)), t_(std::move(t)) {
  const Rational one(1);
  if (x_.sign() < 0 || !(x_ < one) || t_.sign() < 0 || !(t_ < one)) {
    throw std::domain_error("torus point coordinates must lie in [0, 1)");
  }
}

RationalPoint RationalPoint::reduced(const Rational& x, const Rational& t) {
  return RationalPoint(x.frac(), t.frac());
}

Integer RationalPoint::common_denominator() const {
  Integer l;
  mpz_lcm(l.get_mpz_t(), x_.den().get_mpz_t(), t_.den().get_mpz_t());
  return l;
}

std::pair<QuadraticSurd, QuadraticSurd> EigenDirection::vector() const {
  return {QuadraticSurd::root(radicand),
          QuadraticSurd::rational(Rational(slope), radicand)};
}

TorusAutomorphism matrix_from_triple(const Triple& t) {
  return TorusAutomorphism(t.m(), -t.n(), -t.p(), t.m());
}

EigenData eigen(const Triple& t) {
  const Integer radicand = t.n() * t.p();  // m^2 - 1
  const Rational m(t.m());
  return EigenData{
      QuadraticSurd(m, Rational(-1), radicand),
      QuadraticSurd(m, Rational(1), radicand),
      EigenDirection{t.p(), radicand},
      EigenDirection{-t.p(), radicand},
  };
}

std::pair<QuadraticSurd, QuadraticSurd> eigen_residual(
    const TorusAutomorphism& M, const QuadraticSurd& lambda,
    const EigenDirection& dir) {
  const auto [vx, vt] = dir.vector();
  const QuadraticSurd mx =
      Rational(M.a11()) * vx + Rational(M.a12()) * vt;
  const QuadraticSurd mt =
      Rational(M.a21()) * vx + Rational(M.a22()) * vt;
  return {mx - lambda * vx, mt - lambda * vt};
}

bool is_anosov(const TorusAutomorphism& M) {
  const Integer det = M.determinant();
  return (det == 1 || det == -1) && abs(M.trace()) > 2;
}

RationalPoint apply_point(const TorusAutomorphism& M, const RationalPoint& pt) {
  return RationalPoint::reduced(
      Rational(M.a11()) * pt.x() + Rational(M.a12()) * pt.t(),
      Rational(M.a21()) * pt.x() + Rational(M.a22()) * pt.t());
}

std::uint64_t period_of(const TorusAutomorphism& M, const RationalPoint& pt,
                        std::uint64_t max_iter) {
  if (max_iter == 0) throw std::domain_error("max_iter must be >= 1");
  RationalPoint current = apply_point(M, pt);
  for (std::uint64_t k = 1; k <= max_iter; ++k) {
    if (current == pt) return k;
    current = apply_point(M, current);
  }
  throw IterationLimit("no return within " + std::to_string(max_iter) +
                       " iterations; raise max_iter to at least q^2 = " +
                       Integer(pt.common_denominator() *
                               pt.common_denominator())
                           .get_str());
}

std::vector<RationalPoint> orbit_cycle(const TorusAutomorphism& M,
                                       const RationalPoint& pt,
                                       std::uint64_t max_iter) {
  const std::uint64_t period = period_of(M, pt, max_iter);
  std::vector<RationalPoint> out;
  out.reserve(period);
  out.push_back(pt);
  for (std::uint64_t k = 1; k < period; ++k) {
    out.push_back(apply_point(M, out.back()));
  }
  return out;
}

namespace {

double mod1(double v) {
  double r = v - std::floor(v);
  return r >= 1.0 ? 0.0 : r;
}

std::size_t cell(double v) {
  const auto i = static_cast<std::size_t>(v * static_cast<double>(kGridSize));
  return i < kGridSize ? i : kGridSize - 1;
}

}  // namespace

OrbitStats orbit_sample(const TorusAutomorphism& M,
                        std::pair<double, double> seed, std::uint64_t steps) {
  if (steps == 0) throw std::domain_error("steps must be >= 1");
  const double a11 = M.a11().get_d(), a12 = M.a12().get_d();
  const double a21 = M.a21().get_d(), a22 = M.a22().get_d();
  OrbitStats stats;
  double x = mod1(seed.first);
  double t = mod1(seed.second);
  for (std::uint64_t s = 0; s < steps; ++s) {
    auto& slot = stats.counts[cell(x)][cell(t)];
    if (slot++ == 0) ++stats.visited_cells;
    const double nx = mod1(a11 * x + a12 * t);
    const double nt = mod1(a21 * x + a22 * t);
    x = nx;
    t = nt;
  }
  stats.occupancy = static_cast<double>(stats.visited_cells) /
                    static_cast<double>(kGridSize * kGridSize);
  return stats;
}

}  // namespace lorentz
