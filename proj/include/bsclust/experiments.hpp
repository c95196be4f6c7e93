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

// Experiment drivers behind the command-line tool: single-realization traces
// and seeded sweeps over network size and SNR, written as CSV.

#ifndef BSCLUST_EXPERIMENTS_HPP_
#define BSCLUST_EXPERIMENTS_HPP_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "bsclust/bnb.hpp"
#include "bsclust/network.hpp"

namespace bsclust {

struct ExperimentSpec {
  NetworkConfig config;
  std::string model = "composite";
  std::string objective = "wsr";
  double epsilon = 0.0;
  int seeds = 1;
  std::uint64_t base_seed = 1;
  // Runs independent realizations on OpenMP threads. Results do not depend on
  // this flag.
  bool parallel = true;

  // Realization n uses seed base_seed + n.
  std::uint64_t seed(int realization) const { return base_seed + realization; }
  void validate() const;
};

// Branch and bound started from the greedy heuristic's clustering.
Solution solve_from_heuristic(const Network& network, const ExperimentSpec& spec,
                              const TraceCallback& on_iteration = {});

// One row per iteration, then a "total" row. Returns the solution.
Solution run_trace(const Network& network, const ExperimentSpec& spec,
                   std::ostream& csv);

struct SizeSweepRow {
  int num_cells = 0;
  std::uint64_t seed = 0;
  std::int64_t iterations = 0;
  std::int64_t nodes_bounded = 0;
  std::string bell;  // exact B_I in decimal
};

struct SnrSweepRow {
  double snr_db = 0.0;
  std::uint64_t seed = 0;
  std::string method;  // "bnb", "heuristic" or "singletons"
  double sum_throughput = 0.0;
};

template <typename Row>
struct SweepResult {
  std::vector<Row> rows;              // sorted by parameter, then seed
  std::vector<std::string> failures;  // one message per failed run
};

SweepResult<SizeSweepRow> sweep_size(const ExperimentSpec& spec,
                                     std::span<const int> sizes);
SweepResult<SnrSweepRow> sweep_snr(const ExperimentSpec& spec,
                                   std::span<const double> snrs_db);

// Per-run rows followed by one "mean" row per parameter value (and method).
void write_size_csv(const SweepResult<SizeSweepRow>& result,
                    std::span<const int> sizes, std::ostream& csv);
void write_snr_csv(const SweepResult<SnrSweepRow>& result,
                   std::span<const double> snrs_db, std::ostream& csv);

SweepResult<SizeSweepRow> run_sweep_size(const ExperimentSpec& spec,
                                         std::span<const int> sizes,
                                         std::ostream& csv);
SweepResult<SnrSweepRow> run_sweep_snr(const ExperimentSpec& spec,
                                       std::span<const double> snrs_db,
                                       std::ostream& csv);

// Machine-readable run summary of one solve.
std::string solution_summary_json(const Network& network,
                                  const ExperimentSpec& spec,
                                  const Solution& solution,
                                  double heuristic_value);

}  // namespace bsclust

#endif  // BSCLUST_EXPERIMENTS_HPP_
