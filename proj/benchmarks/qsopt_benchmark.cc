// Copyright 2026 The qsopt Authors.
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

#include <numeric>

#include "qsopt/baselines.h"
#include "qsopt/checkers.h"
#include "qsopt/functions.h"
#include "qsopt/maximize.h"
#include "qsopt/minimize.h"

namespace qsopt {
namespace {

void BM_UqsfmaxIwata(benchmark::State& state) {
  const auto f = MakeIwata(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Uqsfmax(*f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_UqsfmaxIwata)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_MinLatticeCom(benchmark::State& state) {
  const auto f = MakeCom(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(MinLattice(*f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinLatticeCom)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_UqsfmaxDeterminant(benchmark::State& state) {
  const auto f = MakeDeterminant(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(Uqsfmax(*f));
}
BENCHMARK(BM_UqsfmaxDeterminant)->Arg(50)->Arg(100);

void BM_UqsfmaxFacility(benchmark::State& state) {
  const auto f = MakePerturbedFacility(100, 400, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Uqsfmax(*f));
}
BENCHMARK(BM_UqsfmaxFacility);

// Plain double greedy versus the prefiltered variant on the same instance.
void BM_DoubleGreedyCom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = MakeCom(n, 2);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(DoubleGreedy(*f, order, false));
}
BENCHMARK(BM_DoubleGreedyCom)->Arg(1000)->Arg(5000);

void BM_PrefixedDoubleGreedyCom(benchmark::State& state) {
  const auto f = MakeCom(static_cast<int>(state.range(0)), 2);
  const Maximizer inner = [](const SetFunction& g) {
    std::vector<int> order(static_cast<std::size_t>(g.ground_size()));
    std::iota(order.begin(), order.end(), 1);
    return DoubleGreedy(g, order, false);
  };
  for (auto _ : state) benchmark::DoNotOptimize(UPrefix(*f, inner));
}
BENCHMARK(BM_PrefixedDoubleGreedyCom)->Arg(1000)->Arg(5000);

void BM_SsbcCheck(benchmark::State& state) {
  const auto f = MakeRandomQsb(static_cast<int>(state.range(0)), 3);
  const std::vector<double> table = f->values();
  for (auto _ : state) benchmark::DoNotOptimize(SatisfiesSsbc(table));
}
BENCHMARK(BM_SsbcCheck)->DenseRange(6, 12, 2);

}  // namespace
}  // namespace qsopt

BENCHMARK_MAIN();
