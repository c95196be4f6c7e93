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

#include "bsclust/experiments.hpp"

#include <omp.h>

#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bsclust/heuristic.hpp"
#include "bsclust/throughput.hpp"
#include "json.hpp"

namespace bsclust {

void ExperimentSpec::validate() const {
  config.validate();
  if (seeds < 1) throw std::invalid_argument("seed count must be >= 1");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  // Tags are checked by constructing the objects.
  (void)ThroughputModel::from_tag(model, config);
  (void)Objective::from_tag(objective, config.num_ms());
}

Solution solve_from_heuristic(const Network& network, const ExperimentSpec& spec,
                              const TraceCallback& on_iteration) {
  const ThroughputModel model =
      ThroughputModel::from_tag(spec.model, network.config());
  const Objective objective =
      Objective::from_tag(spec.objective, network.num_ms());
  const int max_size = network.config().max_cluster_size;
  const SetPartition start = heuristic_cluster(network, max_size);
  return solve(network, model, objective, {spec.epsilon, max_size},
               start.to_rgs(), on_iteration);
}

namespace {

std::string number(double v) {
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << std::setprecision(12) << v;
  return out.str();
}

double total(std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum;
}

// Runs body(n) for n in [0, count), catching per-run failures.
template <typename Body>
std::vector<std::string> run_all(std::int64_t count, bool parallel,
                                 Body&& body) {
  std::vector<std::string> errors(count);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::int64_t n = 0; n < count; ++n) {
    try {
      body(n);
    } catch (const std::exception& e) {
      errors[n] = e.what();
    }
  }
  return errors;
}

}  // namespace

Solution run_trace(const Network& network, const ExperimentSpec& spec,
                   std::ostream& csv) {
  csv << "iteration,best_upper_bound,incumbent_value,nodes_pruned,"
         "fraction_pruned\n";
  Solution solution =
      solve_from_heuristic(network, spec, [&](const TraceRecord& r) {
        csv << r.iteration << ',' << number(r.best_bound) << ','
            << number(r.incumbent) << ',' << r.nodes_pruned << ','
            << number(r.fraction_pruned) << '\n';
      });
  const SolverStats& s = solution.stats;
  const double final_bound =
      s.bound_trace.empty() ? solution.objective_value
                            : s.bound_trace.back().second;
  csv << "total," << number(final_bound) << ','
      << number(solution.objective_value) << ',' << s.nodes_pruned << ','
      << number(s.fraction_pruned()) << '\n';
  return solution;
}

SweepResult<SizeSweepRow> sweep_size(const ExperimentSpec& spec,
                                     std::span<const int> sizes) {
  spec.validate();
  const auto runs = static_cast<std::int64_t>(sizes.size()) * spec.seeds;
  std::vector<SizeSweepRow> rows(runs);
  std::vector<char> done(runs, 0);
  auto errors = run_all(runs, spec.parallel, [&](std::int64_t n) {
    const int cells = sizes[n / spec.seeds];
    const int realization = static_cast<int>(n % spec.seeds);
    NetworkConfig config = spec.config;
    config.num_cells = cells;
    const Network network = generate_network(config, spec.seed(realization));
    const Solution solution = solve_from_heuristic(network, spec);
    rows[n] = {cells, spec.seed(realization), solution.stats.iterations,
               solution.stats.nodes_bounded, bell_number(cells).str()};
    done[n] = 1;
  });
  SweepResult<SizeSweepRow> result;
  for (std::int64_t n = 0; n < runs; ++n) {
    if (done[n]) {
      result.rows.push_back(rows[n]);
    } else {
      result.failures.push_back(
          "I=" + std::to_string(sizes[n / spec.seeds]) +
          " seed=" + std::to_string(spec.seed(static_cast<int>(n % spec.seeds))) +
          ": " + errors[n]);
    }
  }
  return result;
}

SweepResult<SnrSweepRow> sweep_snr(const ExperimentSpec& spec,
                                   std::span<const double> snrs_db) {
  spec.validate();
  const auto runs = static_cast<std::int64_t>(snrs_db.size()) * spec.seeds;
  std::vector<std::vector<SnrSweepRow>> rows(runs);
  std::vector<char> done(runs, 0);
  auto errors = run_all(runs, spec.parallel, [&](std::int64_t n) {
    const double snr = snrs_db[n / spec.seeds];
    const std::uint64_t seed = spec.seed(static_cast<int>(n % spec.seeds));
    NetworkConfig config = spec.config;
    config.snr_db = snr;
    const Network network = generate_network(config, seed);
    const ThroughputModel model = ThroughputModel::from_tag(spec.model, config);
    const Objective objective = Objective::from_tag(spec.objective, config.num_ms());
    const int max_size = config.max_cluster_size;

    const Solution optimum = solve_from_heuristic(network, spec);
    const Evaluation heuristic = evaluate_partition(
        model, objective, network, heuristic_cluster(network, max_size),
        max_size);
    const Evaluation singletons = evaluate_partition(
        model, objective, network,
        baseline_partition(Baseline::kSingletons, config.num_cells), max_size);
    rows[n] = {{snr, seed, "bnb", total(optimum.per_ms_throughput)},
               {snr, seed, "heuristic", total(heuristic.throughputs)},
               {snr, seed, "singletons", total(singletons.throughputs)}};
    done[n] = 1;
  });
  SweepResult<SnrSweepRow> result;
  for (std::int64_t n = 0; n < runs; ++n) {
    if (done[n]) {
      result.rows.insert(result.rows.end(), rows[n].begin(), rows[n].end());
    } else {
      result.failures.push_back(
          "snr=" + number(snrs_db[n / spec.seeds]) +
          " seed=" + std::to_string(spec.seed(static_cast<int>(n % spec.seeds))) +
          ": " + errors[n]);
    }
  }
  return result;
}

void write_size_csv(const SweepResult<SizeSweepRow>& result,
                    std::span<const int> sizes, std::ostream& csv) {
  csv << "I,seed,iterations,nodes_bounded,bell_I\n";
  for (const SizeSweepRow& r : result.rows) {
    csv << r.num_cells << ',' << r.seed << ',' << r.iterations << ','
        << r.nodes_bounded << ',' << r.bell << '\n';
  }
  for (int cells : sizes) {
    double iterations = 0.0;
    double bounded = 0.0;
    int count = 0;
    for (const SizeSweepRow& r : result.rows) {
      if (r.num_cells != cells) continue;
      iterations += static_cast<double>(r.iterations);
      bounded += static_cast<double>(r.nodes_bounded);
      ++count;
    }
    if (count == 0) continue;
    csv << cells << ",mean," << number(iterations / count) << ','
        << number(bounded / count) << ',' << bell_number(cells).str() << '\n';
  }
}

void write_snr_csv(const SweepResult<SnrSweepRow>& result,
                   std::span<const double> snrs_db, std::ostream& csv) {
  csv << "snr_db,seed,method,sum_throughput\n";
  for (const SnrSweepRow& r : result.rows) {
    csv << number(r.snr_db) << ',' << r.seed << ',' << r.method << ','
        << number(r.sum_throughput) << '\n';
  }
  for (double snr : snrs_db) {
    for (const char* method : {"bnb", "heuristic", "singletons"}) {
      double sum = 0.0;
      int count = 0;
      for (const SnrSweepRow& r : result.rows) {
        if (r.snr_db == snr && r.method == method) {
          sum += r.sum_throughput;
          ++count;
        }
      }
      if (count == 0) continue;
      csv << number(snr) << ",mean," << method << ',' << number(sum / count)
          << '\n';
    }
  }
}

SweepResult<SizeSweepRow> run_sweep_size(const ExperimentSpec& spec,
                                         std::span<const int> sizes,
                                         std::ostream& csv) {
  auto result = sweep_size(spec, sizes);
  write_size_csv(result, sizes, csv);
  return result;
}

SweepResult<SnrSweepRow> run_sweep_snr(const ExperimentSpec& spec,
                                       std::span<const double> snrs_db,
                                       std::ostream& csv) {
  auto result = sweep_snr(spec, snrs_db);
  write_snr_csv(result, snrs_db, csv);
  return result;
}

std::string solution_summary_json(const Network& network,
                                  const ExperimentSpec& spec,
                                  const Solution& solution,
                                  double heuristic_value) {
  const SolverStats& s = solution.stats;
  nlohmann::json doc = {
      {"seed", network.seed()},
      {"num_cells", network.num_cells()},
      {"max_cluster_size", network.config().max_cluster_size},
      {"model", spec.model},
      {"objective", spec.objective},
      {"epsilon", spec.epsilon},
      {"rgs", solution.rgs.to_string()},
      {"partition", solution.partition.to_string()},
      {"objective_value", solution.objective_value},
      {"heuristic_value", heuristic_value},
      {"gap", solution.gap},
      {"iterations", s.iterations},
      {"nodes_bounded", s.nodes_bounded},
      {"nodes_pruned", s.nodes_pruned},
      {"fraction_pruned", s.fraction_pruned()},
      {"bell_I", bell_number(network.num_cells()).str()},
      {"per_ms_throughput", solution.per_ms_throughput}};
  return doc.dump(2);
}

}  // namespace bsclust
