// Copyright 2026 The rayleigh-gof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <vector>

#include <benchmark/benchmark.h>

#include "rgof/alternatives.hpp"
#include "rgof/censored.hpp"
#include "rgof/departure.hpp"
#include "rgof/jel.hpp"
#include "rgof/monte_carlo.hpp"
#include "rgof/rayleigh.hpp"

namespace {

std::vector<double> rayleigh_data(std::size_t n) {
  rgof::Stream s(7);
  std::vector<double> x(n);
  rgof::rayleigh_fill(x, rgof::RayleighParam::standard(), s);
  return x;
}

rgof::CensoredSample censored_data(std::size_t n) {
  rgof::Stream s(7);
  const rgof::AlternativeSpec spec(rgof::Family::kRayleigh, {1.0});
  return rgof::sample_censored(spec, rgof::CensoringSpec{0.4, 0.0}, n, s);
}

void BM_ComputeDelta(benchmark::State& state) {
  const auto x = rayleigh_data(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rgof::compute_delta(x).delta_hat);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeDelta)->RangeMultiplier(4)->Range(16, 1 << 16)->Complexity(benchmark::oNLogN);

void BM_Pseudovalues(benchmark::State& state) {
  const auto x = rayleigh_data(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rgof::jackknife_pseudovalues(x).data());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Pseudovalues)->RangeMultiplier(4)->Range(16, 1 << 14)->Complexity(benchmark::oNLogN);

void BM_JelTest(benchmark::State& state) {
  const auto x = rayleigh_data(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rgof::jel_test(x, 0.05).minus2logR);
}
BENCHMARK(BM_JelTest)->Arg(50)->Arg(200)->Arg(1000);

void BM_CensoredDelta(benchmark::State& state) {
  const auto d = censored_data(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rgof::compute_delta_censored(d).delta_c);
}
BENCHMARK(BM_CensoredDelta)->Arg(100)->Arg(1000)->Arg(10000);

void BM_CensoredVariance(benchmark::State& state) {
  const auto d = censored_data(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rgof::reweighted_variance(d).sigma2_0c);
}
BENCHMARK(BM_CensoredVariance)->Arg(100)->Arg(1000)->Arg(10000);

void BM_SimulateNull(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(rgof::simulate_null(rgof::Method::kUstat, 50, 1.0, 1000, 3, 1).front());
  }
}
BENCHMARK(BM_SimulateNull)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
