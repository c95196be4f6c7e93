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

#include "bsclust/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bsclust {

std::vector<PairScore> ranked_pairs(const Network& network) {
  const int cells = network.num_cells();
  const int users = network.ms_per_cell();
  std::vector<PairScore> pairs;
  pairs.reserve(static_cast<std::size_t>(cells) * (cells - 1));
  for (int i = 0; i < cells; ++i) {
    for (int j = 0; j < cells; ++j) {
      if (i == j) continue;
      double score = 0.0;
      for (int k = 0; k < users; ++k) {
        const int ms = i * users + k;
        score += std::log1p(network.gain(ms, j) * network.bs_power(j) /
                            network.noise_power(ms));
      }
      pairs.push_back({i, j, score});
    }
  }
  // Scores never change while merging, so repeatedly taking the argmax of the
  // remaining pairs is a single sorted pass.
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const PairScore& a, const PairScore& b) {
                     return a.score > b.score;
                   });
  return pairs;
}

SetPartition heuristic_cluster(const Network& network, int max_cluster_size) {
  if (max_cluster_size < 1) {
    throw std::invalid_argument("max cluster size must be >= 1");
  }
  const int cells = network.num_cells();
  std::vector<CellSet> cluster_of(cells);
  for (int i = 0; i < cells; ++i) cluster_of[i] = CellSet::single(i);

  for (const PairScore& pair : ranked_pairs(network)) {
    const CellSet merged = cluster_of[pair.from] | cluster_of[pair.to];
    if (merged.size() <= max_cluster_size) {
      for (int cell : merged.to_vector()) cluster_of[cell] = merged;
    }
  }

  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < cells; ++i) {
    // Emit each cluster once, from its smallest member.
    if (std::countr_zero(cluster_of[i].mask()) == i) {
      clusters.push_back(cluster_of[i].to_vector());
    }
  }
  return SetPartition(std::move(clusters), cells);
}

SetPartition baseline_partition(Baseline kind, int num_cells) {
  if (num_cells < 1) throw std::invalid_argument("need at least one cell");
  if (kind == Baseline::kGrand) {
    std::vector<int> all(num_cells);
    std::iota(all.begin(), all.end(), 0);
    return SetPartition({all}, num_cells);
  }
  std::vector<std::vector<int>> singles;
  for (int i = 0; i < num_cells; ++i) singles.push_back({i});
  return SetPartition(std::move(singles), num_cells);
}

}  // namespace bsclust
