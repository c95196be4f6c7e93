// Copyright 2026 The Authors.
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

// Serial versus OpenMP exhaustive search, plus the node bound that the
// branch and bound spends most of its time in.

#include <benchmark/benchmark.h>

#include <cmath>

#include "bsclust/bnb.hpp"
#include "bsclust/heuristic.hpp"
#include "bsclust/network.hpp"

namespace {

using namespace bsclust;

Network bench_network(int cells) {
  NetworkConfig c;
  c.num_cells = cells;
  c.square_side = 2000.0 * std::sqrt(cells / 16.0);
  return generate_network(c, 42);
}

void BM_ExhaustiveSerial(benchmark::State& state) {
  const Network net = bench_network(static_cast<int>(state.range(0)));
  const ThroughputModel m(ModelKind::kComposite, net.config());
  const auto obj = Objective::uniform(ObjectiveKind::kWeightedSum, net.num_ms());
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive_solve(net, m, obj, 4));
  }
}
BENCHMARK(BM_ExhaustiveSerial)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveParallel(benchmark::State& state) {
  const Network net = bench_network(static_cast<int>(state.range(0)));
  const ThroughputModel m(ModelKind::kComposite, net.config());
  const auto obj = Objective::uniform(ObjectiveKind::kWeightedSum, net.num_ms());
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive_solve_parallel(net, m, obj, 4));
  }
}
BENCHMARK(BM_ExhaustiveParallel)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_ObjectiveBound(benchmark::State& state) {
  const Network net = bench_network(16);
  const ThroughputModel m(ModelKind::kComposite, net.config());
  const auto obj = Objective::uniform(ObjectiveKind::kWeightedSum, net.num_ms());
  const BoundEvaluator bounds(net, m, obj, 4);
  const PartialRgs node({1, 2, 1, 3, 2, 4}, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bounds.objective_bound(node));
  }
}
BENCHMARK(BM_ObjectiveBound);

void BM_SolveDefaults(benchmark::State& state) {
  const Network net = bench_network(16);
  const ThroughputModel m(ModelKind::kComposite, net.config());
  const auto obj = Objective::uniform(ObjectiveKind::kWeightedSum, net.num_ms());
  const auto start = heuristic_cluster(net, 4).to_rgs();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(net, m, obj, {0.0, 4}, start));
  }
}
BENCHMARK(BM_SolveDefaults)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
