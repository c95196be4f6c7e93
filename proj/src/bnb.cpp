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

#include "bsclust/bnb.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace bsclust {

std::vector<PartialRgs> branch(const PartialRgs& parent, int max_cluster_size) {
  if (parent.is_complete()) {
    throw std::logic_error("branch called on a complete string");
  }
  std::vector<PartialRgs> children;
  for (int b = 1; b <= parent.max_label() + 1; ++b) {
    const int size = b <= parent.max_label()
                         ? parent.cluster_with_label(b).size()
                         : 0;
    if (size + 1 <= max_cluster_size) children.push_back(parent.extended(b));
  }
  return children;
}

BoundEvaluator::BoundEvaluator(const Network& network,
                               const ThroughputModel& model,
                               const Objective& objective,
                               int max_cluster_size)
    : network_(&network),
      model_(&model),
      objective_(&objective),
      max_size_(max_cluster_size),
      interferers_(network.num_ms()),
      per_size_(network.num_ms()) {
  if (max_cluster_size < 1) {
    throw std::invalid_argument("max cluster size must be >= 1");
  }
  if (static_cast<int>(objective.weights().size()) != network.num_ms()) {
    throw std::invalid_argument("objective weights do not match the MS count");
  }
  for (int ms = 0; ms < network.num_ms(); ++ms) {
    per_size_[ms] = model.per_size_rate(network.snr(ms));
    auto& order = interferers_[ms];
    order.resize(network.num_cells());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return network.gain(ms, a) * network.bs_power(a) >
             network.gain(ms, b) * network.bs_power(b);
    });
  }
}

CellSet BoundEvaluator::best_relaxed_cluster(int ms,
                                             const PartialRgs& node) const {
  const int home = network_->serving_cell(ms);
  CellSet chosen;
  CellSet pool;
  if (node.is_constrained(home)) {
    chosen = node.cluster_of(home);
    if (chosen.size() > max_size_) {
      throw std::invalid_argument("serving cluster exceeds the size limit");
    }
    pool = node.unconstrained();
  } else {
    chosen = CellSet::single(home);
    pool = node.open_cells(max_size_).minus(chosen);
  }
  // Removing interferers only shrinks the denominator, so the strongest
  // admissible ones are the optimal choice.
  int size = chosen.size();
  for (int cell : interferers_[ms]) {
    if (size >= max_size_) break;
    if (pool.contains(cell)) {
      chosen.insert(cell);
      ++size;
    }
  }
  return chosen;
}

double BoundEvaluator::sinr_bound(int ms, const PartialRgs& node) const {
  return sinr(*network_, ms, best_relaxed_cluster(ms, node));
}

int BoundEvaluator::size_bound(int ms, const PartialRgs& node,
                               double sinr_check) const {
  return size_bound(ms, node, {per_size_[ms], model_->fixed_rate(sinr_check)});
}

int BoundEvaluator::size_bound(int ms, const PartialRgs& node,
                               const ThroughputModel::RateTerms& terms) const {
  const int home = network_->serving_cell(ms);
  const int best = model_->best_cluster_size(terms, max_size_);
  const bool constrained = node.is_constrained(home);
  const int current = constrained ? node.cluster_size_of(home) : 1;
  if (current >= best) return current;
  if (constrained) {
    return std::min(current + node.unconstrained().size(), best);
  }
  return std::min(node.open_cells(max_size_).size(), best);
}

double BoundEvaluator::throughput_bound(int ms, const PartialRgs& node) const {
  const ThroughputModel::RateTerms terms{
      per_size_[ms], model_->fixed_rate(sinr_bound(ms, node))};
  return model_->throughput(size_bound(ms, node, terms), terms);
}

double BoundEvaluator::objective_bound(const PartialRgs& node) const {
  thread_local std::vector<double> bounds;
  bounds.resize(network_->num_ms());
  for (int ms = 0; ms < network_->num_ms(); ++ms) {
    bounds[ms] = throughput_bound(ms, node);
  }
  return (*objective_)(bounds);
}

namespace {

Objective unit_sum(int num_ms) {
  return Objective::uniform(ObjectiveKind::kWeightedSum, num_ms);
}

}  // namespace

double sinr_upper_bound(const Network& network, int ms, const PartialRgs& node,
                        int max_cluster_size) {
  const ThroughputModel model(ModelKind::kSpectrumSharing, network.config());
  const Objective objective = unit_sum(network.num_ms());
  return BoundEvaluator(network, model, objective, max_cluster_size)
      .sinr_bound(ms, node);
}

int cluster_size_bound(const ThroughputModel& model, const Network& network,
                       int ms, const PartialRgs& node, int max_cluster_size,
                       double sinr_check) {
  const Objective objective = unit_sum(network.num_ms());
  return BoundEvaluator(network, model, objective, max_cluster_size)
      .size_bound(ms, node, sinr_check);
}

double throughput_upper_bound(const ThroughputModel& model,
                              const Network& network, int ms,
                              const PartialRgs& node, int max_cluster_size) {
  const Objective objective = unit_sum(network.num_ms());
  return BoundEvaluator(network, model, objective, max_cluster_size)
      .throughput_bound(ms, node);
}

double objective_upper_bound(const ThroughputModel& model,
                             const Objective& objective,
                             const Network& network, const PartialRgs& node,
                             int max_cluster_size) {
  return BoundEvaluator(network, model, objective, max_cluster_size)
      .objective_bound(node);
}

namespace {

// Queued prefixes are kept flat; millions of them can be live at once.
struct LiveNode {
  std::array<std::uint8_t, kMaxCells> symbols;
  std::uint8_t length;
  std::uint8_t max_label;
  double bound;

  LiveNode(const PartialRgs& node, double node_bound)
      : length(static_cast<std::uint8_t>(node.length())),
        max_label(static_cast<std::uint8_t>(node.max_label())),
        bound(node_bound) {
    std::copy(node.symbols().begin(), node.symbols().end(), symbols.begin());
  }

  PartialRgs expand(int total_cells) const {
    return PartialRgs(std::vector<int>(symbols.begin(), symbols.begin() + length),
                      total_cells);
  }
};

// Heap order, largest first: highest bound, then longest prefix, then
// lexicographically smallest prefix.
struct LowerPriority {
  bool operator()(const LiveNode& a, const LiveNode& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    if (a.length != b.length) return a.length < b.length;
    return std::lexicographical_compare(b.symbols.begin(),
                                        b.symbols.begin() + b.length,
                                        a.symbols.begin(),
                                        a.symbols.begin() + a.length);
  }
};

double subtree_leaves(int total_cells, int length, int max_label) {
  return completion_count(total_cells - length, max_label);
}

double subtree_leaves(const PartialRgs& node) {
  return subtree_leaves(node.total_cells(), node.length(), node.max_label());
}

}  // namespace

Solution solve(const Network& network, const ThroughputModel& model,
               const Objective& objective, const SolverConfig& config,
               const RestrictedGrowthString& initial_incumbent,
               const TraceCallback& on_iteration) {
  const int cells = network.num_cells();
  const int max_size = config.max_cluster_size;
  if (!(config.epsilon >= 0.0)) {
    throw std::invalid_argument("epsilon must be >= 0");
  }
  if (initial_incumbent.size() != cells) {
    throw std::invalid_argument("initial incumbent has the wrong length");
  }
  SetPartition incumbent(initial_incumbent);
  if (!incumbent.respects_max_size(max_size)) {
    throw std::invalid_argument("initial incumbent violates the size limit");
  }
  double incumbent_value =
      evaluate_partition(model, objective, network, incumbent, max_size).value;

  const BoundEvaluator evaluator(network, model, objective, max_size);
  SolverStats stats;
  stats.total_leaves = completion_count(cells - 1, 1);

  std::vector<LiveNode> live;  // binary heap under LowerPriority
  const LowerPriority lower;
  auto push = [&](const PartialRgs& node, double bound) {
    live.emplace_back(node, bound);
    std::push_heap(live.begin(), live.end(), lower);
  };
  {
    const PartialRgs root(cells);
    const double bound = evaluator.objective_bound(root);
    ++stats.nodes_bounded;
    push(root, bound);
  }

  double best_bound = std::numeric_limits<double>::infinity();
  double gap = 0.0;
  auto record = [&] {
    const double reported = std::max(best_bound, incumbent_value);
    stats.incumbent_trace.emplace_back(stats.iterations, incumbent_value);
    stats.bound_trace.emplace_back(stats.iterations, reported);
    if (on_iteration) {
      on_iteration({stats.iterations, reported, incumbent_value, live.size(),
                    stats.nodes_pruned, stats.fraction_pruned()});
    }
  };

  while (!live.empty()) {
    std::pop_heap(live.begin(), live.end(), lower);
    const LiveNode top = live.back();
    live.pop_back();
    const PartialRgs parent = top.expand(cells);
    ++stats.iterations;
    best_bound = std::min(best_bound, top.bound);

    if (top.bound - incumbent_value < config.epsilon) {
      // Every remaining node is bounded by top.bound.
      gap = std::max(0.0, top.bound - incumbent_value);
      stats.nodes_pruned += 1 + static_cast<std::int64_t>(live.size());
      stats.pruned_leaves += subtree_leaves(parent);
      for (const LiveNode& n : live) {
        stats.pruned_leaves += subtree_leaves(cells, n.length, n.max_label);
      }
      live.clear();
      record();
      break;
    }

    if (parent.is_complete()) {
      // Only the root of a one-cell network is a leaf when dequeued.
      if (top.bound > incumbent_value) {
        incumbent = SetPartition(parent.to_rgs());
        incumbent_value = top.bound;
      }
      record();
      continue;
    }

    const std::vector<PartialRgs> children = branch(parent, max_size);
    double feasible_leaves = 0.0;
    for (const PartialRgs& child : children) {
      feasible_leaves += subtree_leaves(child);
      const double bound = evaluator.objective_bound(child);
      ++stats.nodes_bounded;
      if (bound > incumbent_value) {
        if (child.is_complete()) {
          incumbent = SetPartition(child.to_rgs());
          incumbent_value = bound;
        } else {
          push(child, bound);
        }
      } else {
        ++stats.nodes_pruned;
        stats.pruned_leaves += subtree_leaves(child);
      }
    }
    const int omitted =
        parent.max_label() + 1 - static_cast<int>(children.size());
    stats.nodes_pruned += omitted;
    stats.pruned_leaves += subtree_leaves(parent) - feasible_leaves;
    record();
  }

  Evaluation final_eval =
      evaluate_partition(model, objective, network, incumbent, max_size);
  Solution solution{incumbent,
                    incumbent.to_rgs(),
                    final_eval.value,
                    std::move(final_eval.throughputs),
                    gap,
                    std::move(stats)};
  return solution;
}

}  // namespace bsclust
