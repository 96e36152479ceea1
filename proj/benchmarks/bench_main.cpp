// Copyright 2026 The radtoep Authors.
//
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

#include <cmath>

#include "radtoep/approximation.hpp"
#include "radtoep/berezin.hpp"
#include "radtoep/moments.hpp"
#include "radtoep/spectrum.hpp"

using namespace radtoep;

namespace {

EigenvalueSequence harmonic(std::size_t count) {
  return EigenvalueSequence::generate(count, [](std::size_t n) { return 1.0 / (n + 1.0); });
}

void BM_EigenvaluesPower(benchmark::State& state) {
  const RadialSymbol b = RadialSymbol::power(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_of_symbol(b, static_cast<std::size_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EigenvaluesPower)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_EigenvaluesLogOscillation(benchmark::State& state) {
  const RadialSymbol b = RadialSymbol::log_oscillation(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_of_symbol(b, static_cast<std::size_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EigenvaluesLogOscillation)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ProjectToD2(benchmark::State& state) {
  const auto x = EigenvalueSequence::generate(static_cast<std::size_t>(state.range(0)),
                                              [](std::size_t n) { return std::sin(std::log(n + 1.0)); });
  for (auto _ : state) benchmark::DoNotOptimize(project_to_d2(x, 0.1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ProjectToD2)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_BerezinIterate(benchmark::State& state) {
  const auto lambda = harmonic(20000);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(berezin_iterate_eigenvalues(lambda, k, 50));
}
BENCHMARK(BM_BerezinIterate)->Arg(1)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_BerezinSeriesProfile(benchmark::State& state) {
  const auto lambda = harmonic(20000);
  for (auto _ : state) {
    const BerezinProfile p = berezin_of_radial_operator(lambda, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(p(0.9));
  }
}
BENCHMARK(BM_BerezinSeriesProfile)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_SequenceFromPath(benchmark::State& state) {
  const SpectrumPath path({0.0, 1.0, Complex(1.0, 1.0)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sequence_from_path(path, static_cast<std::size_t>(state.range(0)), 1.0));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SequenceFromPath)->Arg(200000)->Unit(benchmark::kMillisecond);

void BM_LimitPoints(benchmark::State& state) {
  const auto x = sequence_from_path(SpectrumPath({0.0, 1.0, Complex(1.0, 1.0)}), 200000, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(limit_points(x, 0.9, 0.02));
}
BENCHMARK(BM_LimitPoints)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
