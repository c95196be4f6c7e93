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

// Static multicell scenario: I base stations each serving K mobile stations,
// described by long-term (large-scale) channel gains only.
//
// Mobile stations are indexed ms = cell * K + k. Gains are kept in dB as the
// primary representation; linear gains are derived from them so that a saved
// and reloaded network is bit-identical.

#ifndef BSCLUST_NETWORK_HPP_
#define BSCLUST_NETWORK_HPP_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace bsclust {

struct NetworkConfig {
  int num_cells = 16;
  int ms_per_cell = 2;
  int streams_per_ms = 1;
  int bs_antennas = 8;
  int ms_antennas = 2;
  int max_cluster_size = 4;
  double coherence_length = 2700.0;  // symbols
  double snr_db = 20.0;
  double square_side = 2000.0;      // m
  double bs_ms_distance = 250.0;    // m
  double pathloss_offset_db = 15.3;
  double pathloss_exponent_db_per_decade = 37.6;
  double shadow_std_db = 8.0;

  int num_ms() const { return num_cells * ms_per_cell; }

  // Throws std::invalid_argument on non-positive counts or lengths.
  void validate() const;

  friend bool operator==(const NetworkConfig&, const NetworkConfig&) = default;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Raised by load_network / network_from_json on malformed or invalid input.
class NetworkFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Network {
 public:
  // Validates shapes and that every gain, power and noise is positive and
  // finite. Throws std::invalid_argument otherwise.
  Network(NetworkConfig config, std::uint64_t seed,
          std::vector<Point> bs_positions, std::vector<Point> ms_positions,
          std::vector<double> gains_db, std::vector<double> tx_power,
          std::vector<double> noise_power);

  const NetworkConfig& config() const { return config_; }
  std::uint64_t seed() const { return seed_; }
  int num_cells() const { return config_.num_cells; }
  int ms_per_cell() const { return config_.ms_per_cell; }
  int num_ms() const { return config_.num_ms(); }
  int serving_cell(int ms) const { return ms / config_.ms_per_cell; }

  // Large-scale power gain from BS `bs` to MS `ms`.
  double gain(int ms, int bs) const { return gain_[ms * num_cells() + bs]; }
  double gain_db(int ms, int bs) const {
    return gains_db_[ms * num_cells() + bs];
  }
  double tx_power(int ms) const { return tx_power_[ms]; }
  double noise_power(int ms) const { return noise_power_[ms]; }
  // Total transmit power of a base station (sum over its MSs).
  double bs_power(int bs) const { return bs_power_[bs]; }
  // Interference-free SNR gamma_{ms,serving} * P_ms / sigma^2_ms.
  double snr(int ms) const;

  const std::vector<Point>& bs_positions() const { return bs_positions_; }
  const std::vector<Point>& ms_positions() const { return ms_positions_; }
  const std::vector<double>& gains_db() const { return gains_db_; }
  const std::vector<double>& tx_powers() const { return tx_power_; }
  const std::vector<double>& noise_powers() const { return noise_power_; }

  Network with_powers(std::vector<double> tx_power,
                      std::vector<double> noise_power) const;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  NetworkConfig config_;
  std::uint64_t seed_;
  std::vector<Point> bs_positions_;
  std::vector<Point> ms_positions_;
  std::vector<double> gains_db_;
  std::vector<double> gain_;
  std::vector<double> tx_power_;
  std::vector<double> noise_power_;
  std::vector<double> bs_power_;
};

// offset + exponent * log10(distance), in dB.
double path_loss_db(const NetworkConfig& config, double distance_m);

// Drops BSs uniformly in the square, places each MS at the configured
// distance from its BS at a uniform angle, and draws i.i.d. log-normal
// shadowing per link. Powers are then calibrated to config.snr_db with unit
// noise. Draw order: BS (x, y) pairs, MS angles, shadowing row-major.
Network generate_network(const NetworkConfig& config, std::uint64_t seed);

// Sets every noise power to `noise_power` and every transmit power so that the
// received SNR over deterministic path loss at the nominal serving distance
// equals `snr_db`.
Network calibrate_powers(const Network& network, double snr_db,
                         double noise_power = 1.0);

inline constexpr int kNetworkSchemaVersion = 1;

std::string network_to_json(const Network& network);
Network network_from_json(const std::string& text);
void save_network(const Network& network, const std::filesystem::path& path);
Network load_network(const std::filesystem::path& path);

// Partial configs are accepted; missing fields keep their defaults.
NetworkConfig config_from_json(const std::string& text);
NetworkConfig load_config(const std::filesystem::path& path);

}  // namespace bsclust

#endif  // BSCLUST_NETWORK_HPP_
