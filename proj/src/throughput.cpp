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

#include "bsclust/throughput.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/expint.hpp>

namespace bsclust {

double sinr(const Network& network, int ms, CellSet cluster) {
  const int home = network.serving_cell(ms);
  if (!cluster.contains(home)) {
    throw std::invalid_argument("cluster must contain the serving cell");
  }
  double denominator = network.noise_power(ms);
  for (int j = 0; j < network.num_cells(); ++j) {
    if (!cluster.contains(j)) {
      denominator += network.gain(ms, j) * network.bs_power(j);
    }
  }
  return network.gain(ms, home) * network.tx_power(ms) / denominator;
}

double scaled_exp_integral(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("E1 needs a positive argument");
  constexpr double kEps = 1e-16;
  constexpr int kMaxIter = 10000;
  // The continued fraction converges slowly near zero; e^x stays finite
  // well past 50.
  if (x <= 50.0) return std::exp(x) * boost::math::expint(1, x);
  // e^x E1(x) = 1/(x+1- 1/(x+3- 4/(x+5- ...))), modified Lentz.
  constexpr double kTiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return h;
}

double exp_rate(double rho, int streams) {
  if (rho < 0.0 || std::isnan(rho)) {
    throw std::invalid_argument("exp_rate needs a non-negative SINR");
  }
  if (rho == 0.0) return 0.0;
  const double x = 1.0 / rho;
  if (std::isinf(x)) return 0.0;
  return streams * scaled_exp_integral(x);
}

ThroughputModel::ThroughputModel(ModelKind kind, const NetworkConfig& config)
    : kind_(kind),
      num_cells_(config.num_cells),
      streams_(config.streams_per_ms),
      bs_antennas_(config.bs_antennas),
      ms_antennas_(config.ms_antennas),
      ms_per_cell_(config.ms_per_cell),
      coherence_length_(config.coherence_length) {
  config.validate();
  for (int b = 0; b <= kMaxCells; ++b) {
    size_factors_[b] = compute_size_factor(b);
  }
}

ThroughputModel ThroughputModel::from_tag(std::string_view tag,
                                          const NetworkConfig& config) {
  if (tag == "orth-ts") return {ModelKind::kOrthogonalTimeSharing, config};
  if (tag == "spectrum") return {ModelKind::kSpectrumSharing, config};
  if (tag == "composite") return {ModelKind::kComposite, config};
  throw std::invalid_argument("unknown throughput model: " + std::string(tag));
}

std::string ThroughputModel::tag() const {
  switch (kind_) {
    case ModelKind::kOrthogonalTimeSharing:
      return "orth-ts";
    case ModelKind::kSpectrumSharing:
      return "spectrum";
    case ModelKind::kComposite:
      return "composite";
  }
  return "";
}

double ThroughputModel::per_size_rate(double snr) const {
  switch (kind_) {
    case ModelKind::kOrthogonalTimeSharing:
      return streams_ * std::log1p(snr);
    case ModelKind::kSpectrumSharing:
      return 0.0;
    case ModelKind::kComposite:
      return exp_rate(snr, streams_);
  }
  return 0.0;
}

double ThroughputModel::fixed_rate(double sinr) const {
  switch (kind_) {
    case ModelKind::kOrthogonalTimeSharing:
      return 0.0;
    case ModelKind::kSpectrumSharing:
      return streams_ * std::log1p(sinr);
    case ModelKind::kComposite:
      return exp_rate(sinr, streams_);
  }
  return 0.0;
}

double ThroughputModel::compute_size_factor(int cluster_size) const {
  const double b = cluster_size;
  switch (kind_) {
    case ModelKind::kOrthogonalTimeSharing:
      return b / num_cells_ - b * b / coherence_length_;
    case ModelKind::kSpectrumSharing:
      return 0.0;
    case ModelKind::kComposite: {
      const double K = ms_per_cell_;
      const double M = bs_antennas_;
      const double overhead =
          ((M + K * (ms_antennas_ + streams_)) * b + K * M * b * b) /
          coherence_length_;
      return b / num_cells_ - overhead;
    }
  }
  return 0.0;
}

double ThroughputModel::throughput(int cluster_size,
                                   const RateTerms& terms) const {
  return std::max(0.0, value(cluster_size, terms));
}

int ThroughputModel::best_cluster_size(const RateTerms& terms,
                                       int max_size) const {
  int best = 1;
  double best_value = value(1, terms);
  for (int b = 2; b <= max_size; ++b) {
    const double v = value(b, terms);
    if (v > best_value) {
      best = b;
      best_value = v;
    }
  }
  return best;
}

Objective::Objective(ObjectiveKind kind, std::vector<double> weights)
    : kind_(kind), weights_(std::move(weights)) {
  bool any_positive = false;
  for (double w : weights_) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("objective weights must be finite and >= 0");
    }
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) {
    throw std::invalid_argument("objective needs a positive weight");
  }
}

Objective Objective::uniform(ObjectiveKind kind, int num_ms) {
  return Objective(kind, std::vector<double>(num_ms, 1.0));
}

Objective Objective::from_tag(std::string_view tag, int num_ms) {
  if (tag == "wsr") return uniform(ObjectiveKind::kWeightedSum, num_ms);
  if (tag == "minwt") return uniform(ObjectiveKind::kWeightedMin, num_ms);
  throw std::invalid_argument("unknown objective: " + std::string(tag));
}

std::string Objective::tag() const {
  return kind_ == ObjectiveKind::kWeightedSum ? "wsr" : "minwt";
}

double Objective::operator()(std::span<const double> throughputs) const {
  if (throughputs.size() != weights_.size()) {
    throw std::invalid_argument("throughput vector length mismatch");
  }
  if (kind_ == ObjectiveKind::kWeightedSum) {
    double sum = 0.0;
    for (std::size_t n = 0; n < weights_.size(); ++n) {
      sum += weights_[n] * throughputs[n];
    }
    return sum;
  }
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t n = 0; n < weights_.size(); ++n) {
    worst = std::min(worst, weights_[n] * throughputs[n]);
  }
  return worst;
}

double throughput(const ThroughputModel& model, const Network& network,
                  const SetPartition& partition, int ms) {
  const CellSet cluster = partition.cluster_of(network.serving_cell(ms));
  return model.throughput(cluster.size(), sinr(network, ms, cluster),
                          network.snr(ms));
}

Evaluation evaluate_partition(const ThroughputModel& model,
                              const Objective& objective,
                              const Network& network,
                              const SetPartition& partition,
                              int max_cluster_size) {
  if (partition.num_cells() != network.num_cells()) {
    throw std::invalid_argument("partition and network disagree on cell count");
  }
  Evaluation eval;
  eval.throughputs.resize(network.num_ms());
  for (int ms = 0; ms < network.num_ms(); ++ms) {
    eval.throughputs[ms] = throughput(model, network, partition, ms);
  }
  eval.feasible = partition.respects_max_size(max_cluster_size);
  eval.value = eval.feasible ? objective(eval.throughputs) : kInfeasible;
  return eval;
}

}  // namespace bsclust
