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

// Long-term SINR, per-MS throughput models and system objectives.

#ifndef BSCLUST_THROUGHPUT_HPP_
#define BSCLUST_THROUGHPUT_HPP_

#include <array>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bsclust/network.hpp"
#include "bsclust/partition.hpp"

namespace bsclust {

// Long-term SINR of `ms` when its serving cell clusters with `cluster`:
// signal over noise plus interference from every BS outside the cluster.
// Throws std::invalid_argument if the serving cell is not in `cluster`.
double sinr(const Network& network, int ms, CellSet cluster);

// e^x * E1(x) for x > 0, where E1 is the exponential integral. Boost's E1
// up to x = 50, modified Lentz continued fraction above (no overflow).
double scaled_exp_integral(double x);

// Expected rate d * e^{1/rho} * E1(1/rho) of a Rayleigh link with mean SINR
// rho; 0 at rho = 0. Throws std::invalid_argument for negative rho.
double exp_rate(double rho, int streams);

enum class ModelKind { kOrthogonalTimeSharing, kSpectrumSharing, kComposite };

// Maps (cluster size, long-term SINR) to a throughput in nats per symbol.
//
// kOrthogonalTimeSharing: (b/I - b^2/Lc) d log(1 + snr)       (ignores sinr)
// kSpectrumSharing:       d log(1 + sinr)                      (ignores b)
// kComposite:             alpha(b) exp_rate(snr) + exp_rate(sinr), with
//                         alpha(b) = b/I - ((M + K(N + d)) b + K M b^2) / Lc
class ThroughputModel {
 public:
  ThroughputModel(ModelKind kind, const NetworkConfig& config);

  // Tags: "orth-ts", "spectrum", "composite".
  static ThroughputModel from_tag(std::string_view tag,
                                  const NetworkConfig& config);

  ModelKind kind() const { return kind_; }
  std::string tag() const;

  // Every model has the form v(b, sinr) = size_factor(b) * per_size + fixed,
  // where only the two coefficients depend on the link.
  struct RateTerms {
    double per_size = 0.0;
    double fixed = 0.0;
  };
  RateTerms rate_terms(double sinr, double snr) const {
    return {per_size_rate(snr), fixed_rate(sinr)};
  }
  double per_size_rate(double snr) const;
  double fixed_rate(double sinr) const;
  double size_factor(int cluster_size) const {
    return size_factors_[cluster_size];
  }

  // Unclamped v(b, sinr) for an MS with interference-free SNR `snr`.
  double value(int cluster_size, const RateTerms& terms) const {
    return size_factor(cluster_size) * terms.per_size + terms.fixed;
  }
  double value(int cluster_size, double sinr, double snr) const {
    return value(cluster_size, rate_terms(sinr, snr));
  }
  // max(0, v): the throughput actually delivered.
  double throughput(int cluster_size, const RateTerms& terms) const;
  double throughput(int cluster_size, double sinr, double snr) const {
    return throughput(cluster_size, rate_terms(sinr, snr));
  }

  // Smallest b in [1, max_size] maximizing v(b, .).
  int best_cluster_size(const RateTerms& terms, int max_size) const;
  int best_cluster_size(double sinr, double snr, int max_size) const {
    return best_cluster_size(rate_terms(sinr, snr), max_size);
  }

 private:
  ModelKind kind_;
  int num_cells_;
  int streams_;
  int bs_antennas_;
  int ms_antennas_;
  int ms_per_cell_;
  double coherence_length_;
  std::array<double, kMaxCells + 1> size_factors_{};  // indexed by b

  double compute_size_factor(int cluster_size) const;
};

enum class ObjectiveKind { kWeightedSum, kWeightedMin };

class Objective {
 public:
  // Throws std::invalid_argument if a weight is negative or none is positive.
  Objective(ObjectiveKind kind, std::vector<double> weights);

  static Objective uniform(ObjectiveKind kind, int num_ms);
  // Tags: "wsr", "minwt". Unit weights.
  static Objective from_tag(std::string_view tag, int num_ms);

  ObjectiveKind kind() const { return kind_; }
  std::string tag() const;
  std::span<const double> weights() const { return weights_; }

  // Throws std::invalid_argument on a length mismatch.
  double operator()(std::span<const double> throughputs) const;

 private:
  ObjectiveKind kind_;
  std::vector<double> weights_;
};

// Value reported for partitions with a cluster larger than the size limit.
inline constexpr double kInfeasible = -std::numeric_limits<double>::infinity();

double throughput(const ThroughputModel& model, const Network& network,
                  const SetPartition& partition, int ms);

struct Evaluation {
  bool feasible = false;
  double value = kInfeasible;  // kInfeasible unless feasible
  std::vector<double> throughputs;
};

Evaluation evaluate_partition(const ThroughputModel& model,
                              const Objective& objective,
                              const Network& network,
                              const SetPartition& partition,
                              int max_cluster_size);

}  // namespace bsclust

#endif  // BSCLUST_THROUGHPUT_HPP_
