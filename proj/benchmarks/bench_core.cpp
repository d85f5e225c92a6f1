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


#include <benchmark/benchmark.h>

#include "lorentz/lorentz.hpp"

namespace {

using namespace lorentz;

void BM_MinimalTriple(benchmark::State& state) {
  const Rational c2(Integer(1), Integer(2));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_triple(c2));
}
BENCHMARK(BM_MinimalTriple);

void BM_Spectrum(benchmark::State& state) {
  const Rational c2(Integer(1), Integer(2));
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(c2, count));
}
BENCHMARK(BM_Spectrum)->Arg(10)->Arg(40)->Arg(160);

void BM_PellMinSolution(benchmark::State& state) {
  const Integer d(static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pell_min_solution(d));
}
BENCHMARK(BM_PellMinSolution)->Arg(61)->Arg(109)->Arg(991);

void BM_BruteForceSpectra(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_spectra(state.range(0)));
  }
}
BENCHMARK(BM_BruteForceSpectra)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_PeriodOf(benchmark::State& state) {
  const TorusAutomorphism M(3, -2, -4, 3);
  const Integer q(static_cast<long>(state.range(0)));
  const RationalPoint pt(Rational(Integer(1), q), Rational(Integer(2), q));
  for (auto _ : state) benchmark::DoNotOptimize(period_of(M, pt, 1'000'000));
}
BENCHMARK(BM_PeriodOf)->Arg(3)->Arg(101)->Arg(997);

void BM_OrbitSample(benchmark::State& state) {
  const TorusAutomorphism M(3, -2, -4, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit_sample(M, {0.1234, 0.5678}, 100000));
  }
}
BENCHMARK(BM_OrbitSample);

}  // namespace

BENCHMARK_MAIN();
