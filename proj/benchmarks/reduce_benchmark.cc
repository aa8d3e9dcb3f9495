// Copyright 2026 The dskernel Authors
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

#include <cstdint>

#include <benchmark/benchmark.h>

#include "dskernel/plangen.hpp"
#include "dskernel/reduction.hpp"
#include "dskernel/solver.hpp"

namespace dskernel {
namespace {

Graph Instance(const benchmark::State& state) {
  auto n = static_cast<std::uint32_t>(state.range(0));
  auto m = static_cast<std::uint32_t>(state.range(1));
  return RandomPlanar({n, m, 17});
}

void BM_ReduceGadget(benchmark::State& state) {
  Graph g = Instance(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Reduce(g, Mode::Gadget()));
  }
}

void BM_ReduceAnnotatedExtra(benchmark::State& state) {
  Graph g = Instance(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Reduce(g, Mode::Annotated(true)));
  }
}

void BM_RandomPlanar(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Instance(state));
}

void BM_BranchAndReduce(benchmark::State& state) {
  Graph g = Instance(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BranchAndReduce(g, Mode::Annotated(true)));
  }
}

void Sizes(benchmark::internal::Benchmark* b) {
  for (int n : {100, 500, 1000, 2000, 4000}) {
    b->Args({n, n + n / 2});
    b->Args({n, 3 * n - 6});
  }
  b->Unit(benchmark::kMillisecond);
}

BENCHMARK(BM_ReduceGadget)->Apply(Sizes);
BENCHMARK(BM_ReduceAnnotatedExtra)->Apply(Sizes);
BENCHMARK(BM_RandomPlanar)->Apply(Sizes);
BENCHMARK(BM_BranchAndReduce)
    ->Args({30, 45})
    ->Args({50, 75})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dskernel

BENCHMARK_MAIN();
