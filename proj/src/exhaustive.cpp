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

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bsclust/heuristic.hpp"

namespace bsclust {
namespace {

void check_guard(const Network& network, const ExhaustiveOptions& options) {
  if (network.num_cells() > options.max_cells && !options.override_limit) {
    throw std::invalid_argument(
        "exhaustive search refused for " +
        std::to_string(network.num_cells()) + " cells (limit " +
        std::to_string(options.max_cells) + ")");
  }
}

struct Best {
  std::vector<int> symbols;
  double value = kInfeasible;
  std::int64_t scanned = 0;
};

// Scans every completion of `prefix`, keeping the first maximizer.
void scan(const Network& network, const ThroughputModel& model,
          const Objective& objective, int max_size, std::vector<int> prefix,
          Best& best) {
  PartitionEnumerator strings(network.num_cells(), max_size, std::move(prefix));
  while (strings.next()) {
    ++best.scanned;
    const RestrictedGrowthString rgs(
        std::vector<int>(strings.symbols().begin(), strings.symbols().end()));
    const double value =
        evaluate_partition(model, objective, network, SetPartition(rgs),
                           max_size)
            .value;
    if (best.symbols.empty() || value > best.value) {
      best.value = value;
      best.symbols.assign(rgs.symbols().begin(), rgs.symbols().end());
    }
  }
}

Solution to_solution(const Network& network, const ThroughputModel& model,
                     const Objective& objective, int max_size,
                     const Best& best) {
  RestrictedGrowthString rgs(best.symbols);
  SetPartition partition(rgs);
  Evaluation eval =
      evaluate_partition(model, objective, network, partition, max_size);
  SolverStats stats;
  stats.iterations = best.scanned;
  stats.nodes_bounded = best.scanned;
  stats.total_leaves = completion_count(network.num_cells() - 1, 1);
  return Solution{std::move(partition), std::move(rgs), eval.value,
                  std::move(eval.throughputs), 0.0, std::move(stats)};
}

}  // namespace

Solution exhaustive_solve(const Network& network, const ThroughputModel& model,
                          const Objective& objective, int max_cluster_size,
                          const ExhaustiveOptions& options) {
  check_guard(network, options);
  Best best;
  scan(network, model, objective, max_cluster_size, {1}, best);
  return to_solution(network, model, objective, max_cluster_size, best);
}

Solution exhaustive_solve_parallel(const Network& network,
                                   const ThroughputModel& model,
                                   const Objective& objective,
                                   int max_cluster_size,
                                   const ExhaustiveOptions& options) {
  check_guard(network, options);
  const int split = std::min(network.num_cells(), 5);
  std::vector<std::vector<int>> prefixes;
  {
    PartitionEnumerator heads(split, max_cluster_size);
    while (heads.next()) {
      prefixes.emplace_back(heads.symbols().begin(), heads.symbols().end());
    }
  }
  std::vector<Best> partial(prefixes.size());
  const auto count = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t p = 0; p < count; ++p) {
    scan(network, model, objective, max_cluster_size, prefixes[p], partial[p]);
  }
  // Prefixes are in lexicographic order, so a strict comparison keeps the
  // first maximizer, matching the serial scan.
  Best best;
  for (const Best& b : partial) {
    best.scanned += b.scanned;
    if (b.symbols.empty()) continue;
    if (best.symbols.empty() || b.value > best.value) {
      best.value = b.value;
      best.symbols = b.symbols;
    }
  }
  return to_solution(network, model, objective, max_cluster_size, best);
}

}  // namespace bsclust
