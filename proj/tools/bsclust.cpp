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

// bsclust: optimal base station clustering experiments.
//
//   bsclust generate   --config cfg.json --base-seed 7 --out net.json
//   bsclust solve      --network net.json --model composite --objective wsr
//   bsclust trace      --base-seed 7 --out trace.csv
//   bsclust sweep-size --i-list 4,6,8,10 --seeds 20 --out size.csv
//   bsclust sweep-snr  --snr-list 0,10,20,30 --seeds 20 --out snr.csv

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bsclust/experiments.hpp"
#include "bsclust/heuristic.hpp"
#include "bsclust/network.hpp"
#include "bsclust/throughput.hpp"

namespace {

using namespace bsclust;

struct Options {
  std::string config_path;
  std::string network_path;
  std::string model = "composite";
  std::string objective = "wsr";
  double epsilon = 0.0;
  int seeds = 1;
  std::uint64_t base_seed = 1;
  std::optional<int> max_cluster_size;
  std::optional<int> cells;
  std::optional<double> snr_db;
  std::vector<double> snr_list{0, 5, 10, 15, 20, 25, 30};
  std::vector<int> i_list{4, 5, 6, 7, 8, 9, 10};
  std::string out;
  std::string trace;
  bool serial = false;
};

NetworkConfig make_config(const Options& o) {
  NetworkConfig config =
      o.config_path.empty() ? NetworkConfig{} : load_config(o.config_path);
  if (o.cells) config.num_cells = *o.cells;
  if (o.snr_db) config.snr_db = *o.snr_db;
  if (o.max_cluster_size) config.max_cluster_size = *o.max_cluster_size;
  config.validate();
  return config;
}

ExperimentSpec make_spec(const Options& o, const NetworkConfig& config) {
  ExperimentSpec spec;
  spec.config = config;
  spec.model = o.model;
  spec.objective = o.objective;
  spec.epsilon = o.epsilon;
  spec.seeds = o.seeds;
  spec.base_seed = o.base_seed;
  spec.parallel = !o.serial;
  spec.validate();
  return spec;
}

// A saved network, or a fresh realization drawn from the config and base seed.
Network make_network(const Options& o) {
  if (o.network_path.empty()) {
    return generate_network(make_config(o), o.base_seed);
  }
  Network network = load_network(o.network_path);
  if (!o.max_cluster_size) return network;
  NetworkConfig config = network.config();
  config.max_cluster_size = *o.max_cluster_size;
  return Network(config, network.seed(), network.bs_positions(),
                 network.ms_positions(), network.gains_db(),
                 network.tx_powers(), network.noise_powers());
}

// Writes to --out, or stdout when no path is given.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("error writing " + path);
}

int report_failures(const std::vector<std::string>& failures) {
  for (const std::string& f : failures) std::cerr << "failed: " << f << '\n';
  return failures.empty() ? 0 : 1;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_path, "NetworkConfig JSON (partial ok)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--cells", o.cells, "number of cells I");
  cmd->add_option("--snr-db", o.snr_db, "calibrated SNR in dB");
  cmd->add_option("--max-cluster-size", o.max_cluster_size,
                  "cluster size limit D");
  cmd->add_option("--base-seed", o.base_seed, "seed of realization 0");
  cmd->add_option("--out", o.out, "output path (default stdout)");
}

void add_solver(CLI::App* cmd, Options& o) {
  cmd->add_option("--model", o.model, "orth-ts | spectrum | composite")
      ->check(CLI::IsMember({"orth-ts", "spectrum", "composite"}));
  cmd->add_option("--objective", o.objective, "wsr | minwt")
      ->check(CLI::IsMember({"wsr", "minwt"}));
  cmd->add_option("--epsilon", o.epsilon, "absolute optimality gap")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Globally optimal base station clustering"};
  app.require_subcommand(1);
  Options o;

  CLI::App* generate = app.add_subcommand("generate", "draw a network");
  add_common(generate, o);

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve one network");
  add_common(solve_cmd, o);
  add_solver(solve_cmd, o);
  solve_cmd->add_option("--network", o.network_path, "network JSON")
      ->check(CLI::ExistingFile);
  solve_cmd->add_option("--trace", o.trace, "also write the iteration trace");

  CLI::App* trace = app.add_subcommand("trace", "iteration trace as CSV");
  add_common(trace, o);
  add_solver(trace, o);
  trace->add_option("--network", o.network_path, "network JSON")
      ->check(CLI::ExistingFile);

  CLI::App* sweep_size_cmd =
      app.add_subcommand("sweep-size", "complexity versus network size");
  add_common(sweep_size_cmd, o);
  add_solver(sweep_size_cmd, o);
  sweep_size_cmd->add_option("--seeds", o.seeds, "realizations per point")
      ->check(CLI::PositiveNumber);
  sweep_size_cmd->add_option("--i-list", o.i_list, "cell counts")
      ->delimiter(',');
  sweep_size_cmd->add_flag("--serial", o.serial, "run realizations in order");

  CLI::App* sweep_snr_cmd =
      app.add_subcommand("sweep-snr", "sum throughput versus SNR");
  add_common(sweep_snr_cmd, o);
  add_solver(sweep_snr_cmd, o);
  sweep_snr_cmd->add_option("--seeds", o.seeds, "realizations per point")
      ->check(CLI::PositiveNumber);
  sweep_snr_cmd->add_option("--snr-list", o.snr_list, "SNRs in dB")
      ->delimiter(',');
  sweep_snr_cmd->add_flag("--serial", o.serial, "run realizations in order");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      emit(o.out, network_to_json(generate_network(make_config(o), o.base_seed)) +
                      "\n");
      return 0;
    }
    if (solve_cmd->parsed() || trace->parsed()) {
      const Network network = make_network(o);
      const ExperimentSpec spec = make_spec(o, network.config());
      if (trace->parsed()) {
        std::ostringstream csv;
        run_trace(network, spec, csv);
        emit(o.out, csv.str());
        return 0;
      }
      Solution solution = [&] {
        if (o.trace.empty()) return solve_from_heuristic(network, spec);
        std::ostringstream csv;
        Solution s = run_trace(network, spec, csv);
        emit(o.trace, csv.str());
        return s;
      }();
      const int max_size = network.config().max_cluster_size;
      const double heuristic_value =
          evaluate_partition(
              ThroughputModel::from_tag(spec.model, network.config()),
              Objective::from_tag(spec.objective, network.num_ms()), network,
              heuristic_cluster(network, max_size), max_size)
              .value;
      emit(o.out,
           solution_summary_json(network, spec, solution, heuristic_value) +
               "\n");
      return 0;
    }
    const ExperimentSpec spec = make_spec(o, make_config(o));
    std::ostringstream csv;
    if (sweep_size_cmd->parsed()) {
      const auto result = run_sweep_size(spec, o.i_list, csv);
      emit(o.out, csv.str());
      return report_failures(result.failures);
    }
    const auto result = run_sweep_snr(spec, o.snr_list, csv);
    emit(o.out, csv.str());
    return report_failures(result.failures);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
