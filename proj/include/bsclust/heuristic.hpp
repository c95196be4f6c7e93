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

#ifndef BSCLUST_HEURISTIC_HPP_
#define BSCLUST_HEURISTIC_HPP_

#include <cstdint>
#include <vector>

#include "bsclust/bnb.hpp"
#include "bsclust/network.hpp"
#include "bsclust/partition.hpp"
#include "bsclust/throughput.hpp"

namespace bsclust {

struct PairScore {
  int from = 0;
  int to = 0;
  double score = 0.0;
};

// Every ordered pair (i, j), i != j, scored by
// sum_k log(1 + gamma_{i_k j} P_j / sigma^2_{i_k}), in processing order:
// highest score first, ties to the smaller (i, j).
std::vector<PairScore> ranked_pairs(const Network& network);

// Agglomerative greedy clustering. Starting from singletons, walks the ranked
// pairs and merges the two clusters of each pair whenever the union has at
// most `max_cluster_size` cells.
SetPartition heuristic_cluster(const Network& network, int max_cluster_size);

enum class Baseline { kSingletons, kGrand };

SetPartition baseline_partition(Baseline kind, int num_cells);

struct ExhaustiveOptions {
  int max_cells = 12;  // refuse larger networks...
  bool override_limit = false;  // ...unless this is set
};

// Scans every restricted growth string whose clusters respect the size limit
// and returns the maximizer, the lexicographically first one on ties. The
// Solution's stats count scanned partitions in nodes_bounded. Throws
// std::invalid_argument above the cell guard.
Solution exhaustive_solve(const Network& network, const ThroughputModel& model,
                          const Objective& objective, int max_cluster_size,
                          const ExhaustiveOptions& options = {});

// Same result as exhaustive_solve, with the strings split by prefix across
// OpenMP threads.
Solution exhaustive_solve_parallel(const Network& network,
                                   const ThroughputModel& model,
                                   const Objective& objective,
                                   int max_cluster_size,
                                   const ExhaustiveOptions& options = {});

}  // namespace bsclust

#endif  // BSCLUST_HEURISTIC_HPP_
