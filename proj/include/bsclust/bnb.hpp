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

// Best-first branch and bound over partial restricted growth strings.
//
// Each node of the search tree is a prefix of a restricted growth string; its
// leaves are the complete strings, i.e. all clusterings of the network. A
// node's upper bound combines, per MS, the best SINR any completion could give
// (clusters may overlap in the relaxation, so greedy selection of the
// strongest interferers is exact) with the most favourable cluster size any
// completion could reach. Subtrees whose bound does not beat the incumbent are
// pruned.

#ifndef BSCLUST_BNB_HPP_
#define BSCLUST_BNB_HPP_

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "bsclust/network.hpp"
#include "bsclust/partition.hpp"
#include "bsclust/throughput.hpp"

namespace bsclust {

struct SolverConfig {
  double epsilon = 0.0;  // absolute optimality gap
  int max_cluster_size = 4;
};

struct TraceRecord {
  std::int64_t iteration = 0;
  double best_bound = 0.0;
  double incumbent = 0.0;
  std::size_t live_size = 0;
  std::int64_t nodes_pruned = 0;
  // Share of the B_I leaves of the unconstrained tree lying in pruned
  // subtrees.
  double fraction_pruned = 0.0;
};

using TraceCallback = std::function<void(const TraceRecord&)>;

struct SolverStats {
  std::int64_t iterations = 0;     // nodes dequeued
  std::int64_t nodes_bounded = 0;  // root plus every child whose bound was computed
  // Children discarded by the bound or by the size limit, plus the live
  // nodes left when the gap closes.
  std::int64_t nodes_pruned = 0;
  double pruned_leaves = 0.0;
  double total_leaves = 0.0;
  std::vector<std::pair<std::int64_t, double>> incumbent_trace;
  std::vector<std::pair<std::int64_t, double>> bound_trace;

  double fraction_pruned() const {
    return total_leaves > 0 ? pruned_leaves / total_leaves : 0.0;
  }
};

struct Solution {
  SetPartition partition;
  RestrictedGrowthString rgs;
  double objective_value = 0.0;
  std::vector<double> per_ms_throughput;
  double gap = 0.0;
  SolverStats stats;
};

// Children of `parent`: one per label 1..max+1, omitting those whose cluster
// would exceed `max_cluster_size`. Throws std::logic_error on a complete
// string.
std::vector<PartialRgs> branch(const PartialRgs& parent, int max_cluster_size);

// Bound computations for one (network, model, objective, size limit). Caches
// every MS's interferers sorted by received interference power. Holds
// references; the arguments must outlive it.
class BoundEvaluator {
 public:
  BoundEvaluator(const Network& network, const ThroughputModel& model,
                 const Objective& objective, int max_cluster_size);

  // Largest long-term SINR over the relaxed clusters E with |E| <= D:
  //   serving cell assigned:   S(i) <= E <= S(i) + unassigned cells
  //   serving cell unassigned: i in E <= open cells
  // Throws std::invalid_argument if the serving cluster is already over D.
  double sinr_bound(int ms, const PartialRgs& node) const;
  // The relaxed cluster attaining sinr_bound.
  CellSet best_relaxed_cluster(int ms, const PartialRgs& node) const;

  int size_bound(int ms, const PartialRgs& node, double sinr_check) const;
  double throughput_bound(int ms, const PartialRgs& node) const;
  double objective_bound(const PartialRgs& node) const;

  int max_cluster_size() const { return max_size_; }

 private:
  const Network* network_;
  const ThroughputModel* model_;
  const Objective* objective_;
  int size_bound(int ms, const PartialRgs& node,
                 const ThroughputModel::RateTerms& terms) const;

  int max_size_;
  std::vector<std::vector<int>> interferers_;  // per MS, strongest first
  std::vector<double> per_size_;               // per MS, depends on SNR only
};

double sinr_upper_bound(const Network& network, int ms,
                        const PartialRgs& node, int max_cluster_size);

int cluster_size_bound(const ThroughputModel& model, const Network& network,
                       int ms, const PartialRgs& node, int max_cluster_size,
                       double sinr_check);

double throughput_upper_bound(const ThroughputModel& model,
                              const Network& network, int ms,
                              const PartialRgs& node, int max_cluster_size);

double objective_upper_bound(const ThroughputModel& model,
                             const Objective& objective,
                             const Network& network, const PartialRgs& node,
                             int max_cluster_size);

// Returns an epsilon-optimal clustering. Ties in the live queue go to the
// longer prefix, then to the lexicographically smaller one, so runs are
// deterministic. Throws std::invalid_argument if `initial_incumbent` has the
// wrong length or a cluster over the size limit.
Solution solve(const Network& network, const ThroughputModel& model,
               const Objective& objective, const SolverConfig& config,
               const RestrictedGrowthString& initial_incumbent,
               const TraceCallback& on_iteration = {});

}  // namespace bsclust

#endif  // BSCLUST_BNB_HPP_
