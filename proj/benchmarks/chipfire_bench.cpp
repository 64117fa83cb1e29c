// Copyright 2026 The chipfire Authors.
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <benchmark/benchmark.h>

#include "chipfire/divisor.hpp"
#include "chipfire/gonality.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/independence.hpp"
#include "chipfire/rank.hpp"

using namespace chipfire;

namespace {

Divisor stack_on(int count, VertexId v, std::int64_t chips) {
  Divisor d = Divisor::zero(count);
  d[v] = chips;
  return d;
}

void BM_DharBurn(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Graph g = queen_graph(side, side);
  Divisor d = Divisor::zero(g.vertex_count());
  for (VertexId v = 1; v < g.vertex_count(); ++v) d[v] = (v * 7) % (2 * side);
  for (auto _ : state) benchmark::DoNotOptimize(dhar_burn(g, d, 0));
}
BENCHMARK(BM_DharBurn)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_QReduceStack(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Graph g = queen_graph(side, side);
  const Divisor d = stack_on(g.vertex_count(), g.vertex_count() - 1, 4 * g.vertex_count());
  for (auto _ : state) benchmark::DoNotOptimize(q_reduce(g, d, 0));
}
BENCHMARK(BM_QReduceStack)->Arg(4)->Arg(8)->Arg(12);

void BM_QReduceDebt(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Graph g = toroidal_queen_graph(side, side);
  Divisor d = Divisor::zero(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) d[v] = (v % 3 == 0) ? 3 : -1;
  for (auto _ : state) benchmark::DoNotOptimize(q_reduce(g, d, 0));
}
BENCHMARK(BM_QReduceDebt)->Arg(5)->Arg(8)->Arg(12);

void BM_EightQueensSets(benchmark::State& state) {
  const Graph g = queen_graph(8, 8);
  SearchLimits limits;
  limits.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(max_independent_sets(g, limits));
}
BENCHMARK(BM_EightQueensSets)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PositiveRankQ8(benchmark::State& state) {
  const Graph g = queen_graph(8, 8);
  const Divisor d = indep_divisor(g, max_independent_sets(g).sets.front());
  for (auto _ : state) benchmark::DoNotOptimize(has_positive_rank(g, d));
}
BENCHMARK(BM_PositiveRankQ8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
