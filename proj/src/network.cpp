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

#include "bsclust/network.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "bsclust/partition.hpp"
#include "bsclust/rng.hpp"
#include "json.hpp"

namespace bsclust {

using nlohmann::json;

void NetworkConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("invalid config: ") + what);
  };
  require(num_cells >= 1 && num_cells <= kMaxCells, "num_cells in [1, 64]");
  require(ms_per_cell >= 1, "ms_per_cell >= 1");
  require(streams_per_ms >= 1, "streams_per_ms >= 1");
  require(bs_antennas >= 1, "bs_antennas >= 1");
  require(ms_antennas >= 1, "ms_antennas >= 1");
  require(max_cluster_size >= 1, "max_cluster_size >= 1");
  require(coherence_length > 0, "coherence_length > 0");
  require(square_side > 0, "square_side > 0");
  require(bs_ms_distance > 0, "bs_ms_distance > 0");
  require(shadow_std_db >= 0, "shadow_std_db >= 0");
  require(std::isfinite(snr_db), "snr_db finite");
}

Network::Network(NetworkConfig config, std::uint64_t seed,
                 std::vector<Point> bs_positions,
                 std::vector<Point> ms_positions, std::vector<double> gains_db,
                 std::vector<double> tx_power, std::vector<double> noise_power)
    : config_(config),
      seed_(seed),
      bs_positions_(std::move(bs_positions)),
      ms_positions_(std::move(ms_positions)),
      gains_db_(std::move(gains_db)),
      tx_power_(std::move(tx_power)),
      noise_power_(std::move(noise_power)) {
  config_.validate();
  const auto cells = static_cast<std::size_t>(config_.num_cells);
  const auto ms = static_cast<std::size_t>(config_.num_ms());
  if (bs_positions_.size() != cells || ms_positions_.size() != ms ||
      gains_db_.size() != ms * cells || tx_power_.size() != ms ||
      noise_power_.size() != ms) {
    throw std::invalid_argument("network arrays do not match the config shape");
  }
  gain_.resize(gains_db_.size());
  for (std::size_t n = 0; n < gains_db_.size(); ++n) {
    gain_[n] = std::pow(10.0, gains_db_[n] / 10.0);
    if (!std::isfinite(gains_db_[n]) || !std::isfinite(gain_[n]) ||
        !(gain_[n] > 0.0)) {
      throw std::invalid_argument("channel gains must be positive and finite");
    }
  }
  for (std::size_t m = 0; m < ms; ++m) {
    if (!(tx_power_[m] > 0.0) || !std::isfinite(tx_power_[m])) {
      throw std::invalid_argument("transmit powers must be positive and finite");
    }
    if (!(noise_power_[m] > 0.0) || !std::isfinite(noise_power_[m])) {
      throw std::invalid_argument("noise powers must be positive and finite");
    }
  }
  bs_power_.assign(cells, 0.0);
  for (std::size_t m = 0; m < ms; ++m) {
    bs_power_[m / config_.ms_per_cell] += tx_power_[m];
  }
}

double Network::snr(int ms) const {
  return gain(ms, serving_cell(ms)) * tx_power(ms) / noise_power(ms);
}

Network Network::with_powers(std::vector<double> tx_power,
                             std::vector<double> noise_power) const {
  return Network(config_, seed_, bs_positions_, ms_positions_, gains_db_,
                 std::move(tx_power), std::move(noise_power));
}

double path_loss_db(const NetworkConfig& config, double distance_m) {
  return config.pathloss_offset_db +
         config.pathloss_exponent_db_per_decade * std::log10(distance_m);
}

Network generate_network(const NetworkConfig& config, std::uint64_t seed) {
  config.validate();
  Rng rng(seed);
  const int cells = config.num_cells;
  const int ms_count = config.num_ms();

  std::vector<Point> bs(cells);
  for (Point& p : bs) {
    p.x = rng.uniform(0.0, config.square_side);
    p.y = rng.uniform(0.0, config.square_side);
  }
  std::vector<Point> ms(ms_count);
  for (int m = 0; m < ms_count; ++m) {
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const Point& home = bs[m / config.ms_per_cell];
    ms[m] = {home.x + config.bs_ms_distance * std::cos(angle),
             home.y + config.bs_ms_distance * std::sin(angle)};
  }
  std::vector<double> gains_db(static_cast<std::size_t>(ms_count) * cells);
  for (int m = 0; m < ms_count; ++m) {
    for (int j = 0; j < cells; ++j) {
      // The serving link uses the nominal distance exactly; cos/sin round-off
      // would otherwise perturb it in the last bits.
      const double dist =
          j == m / config.ms_per_cell
              ? config.bs_ms_distance
              : std::hypot(ms[m].x - bs[j].x, ms[m].y - bs[j].y);
      const double shadow = rng.normal(0.0, 1.0) * config.shadow_std_db;
      gains_db[static_cast<std::size_t>(m) * cells + j] =
          -path_loss_db(config, dist) + shadow;
    }
  }
  Network raw(config, seed, std::move(bs), std::move(ms), std::move(gains_db),
              std::vector<double>(ms_count, 1.0),
              std::vector<double>(ms_count, 1.0));
  return calibrate_powers(raw, config.snr_db);
}

Network calibrate_powers(const Network& network, double snr_db,
                         double noise_power) {
  const NetworkConfig& config = network.config();
  const double reference_loss_db = path_loss_db(config, config.bs_ms_distance);
  const double power = noise_power *
                       std::pow(10.0, snr_db / 10.0) *
                       std::pow(10.0, reference_loss_db / 10.0);
  const auto ms = static_cast<std::size_t>(network.num_ms());
  return network.with_powers(std::vector<double>(ms, power),
                             std::vector<double>(ms, noise_power));
}

namespace {

json config_to_json(const NetworkConfig& c) {
  return {{"num_cells", c.num_cells},
          {"ms_per_cell", c.ms_per_cell},
          {"streams_per_ms", c.streams_per_ms},
          {"bs_antennas", c.bs_antennas},
          {"ms_antennas", c.ms_antennas},
          {"max_cluster_size", c.max_cluster_size},
          {"coherence_length", c.coherence_length},
          {"snr_db", c.snr_db},
          {"square_side", c.square_side},
          {"bs_ms_distance", c.bs_ms_distance},
          {"pathloss_offset_db", c.pathloss_offset_db},
          {"pathloss_exponent_db_per_decade", c.pathloss_exponent_db_per_decade},
          {"shadow_std_db", c.shadow_std_db}};
}

NetworkConfig config_from(const json& j) {
  if (!j.is_object()) throw NetworkFormatError("config must be an object");
  NetworkConfig c;
  auto field = [&](const char* name, auto& out) {
    if (j.contains(name)) j.at(name).get_to(out);
  };
  field("num_cells", c.num_cells);
  field("ms_per_cell", c.ms_per_cell);
  field("streams_per_ms", c.streams_per_ms);
  field("bs_antennas", c.bs_antennas);
  field("ms_antennas", c.ms_antennas);
  field("max_cluster_size", c.max_cluster_size);
  field("coherence_length", c.coherence_length);
  field("snr_db", c.snr_db);
  field("square_side", c.square_side);
  field("bs_ms_distance", c.bs_ms_distance);
  field("pathloss_offset_db", c.pathloss_offset_db);
  field("pathloss_exponent_db_per_decade", c.pathloss_exponent_db_per_decade);
  field("shadow_std_db", c.shadow_std_db);
  return c;
}

json points_to_json(const std::vector<Point>& points) {
  json out = json::array();
  for (const Point& p : points) out.push_back({p.x, p.y});
  return out;
}

std::vector<Point> points_from(const json& j) {
  std::vector<Point> out;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2) {
      throw NetworkFormatError("positions must be [x, y] pairs");
    }
    out.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error reading " + path.string());
  return buffer.str();
}

}  // namespace

std::string network_to_json(const Network& network) {
  // The gain matrix is stored flat, row-major over (ms, bs).
  json doc = {{"schema_version", kNetworkSchemaVersion},
              {"config", config_to_json(network.config())},
              {"seed", network.seed()},
              {"bs_positions", points_to_json(network.bs_positions())},
              {"ms_positions", points_to_json(network.ms_positions())},
              {"gains_db", network.gains_db()},
              {"tx_power", network.tx_powers()},
              {"noise_power", network.noise_powers()}};
  // nlohmann emits doubles with 17 significant digits, which round-trips.
  return doc.dump(1);
}

Network network_from_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    const int version = doc.at("schema_version").get<int>();
    if (version != kNetworkSchemaVersion) {
      throw NetworkFormatError("unsupported schema_version " +
                               std::to_string(version));
    }
    return Network(config_from(doc.at("config")),
                   doc.at("seed").get<std::uint64_t>(),
                   points_from(doc.at("bs_positions")),
                   points_from(doc.at("ms_positions")),
                   doc.at("gains_db").get<std::vector<double>>(),
                   doc.at("tx_power").get<std::vector<double>>(),
                   doc.at("noise_power").get<std::vector<double>>());
  } catch (const json::exception& e) {
    throw NetworkFormatError(std::string("malformed network file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw NetworkFormatError(std::string("invalid network: ") + e.what());
  }
}

void save_network(const Network& network, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << network_to_json(network) << '\n';
  if (!out) throw std::runtime_error("error writing " + path.string());
}

Network load_network(const std::filesystem::path& path) {
  return network_from_json(read_file(path));
}

NetworkConfig config_from_json(const std::string& text) {
  try {
    NetworkConfig c = config_from(json::parse(text));
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw NetworkFormatError(std::string("malformed config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw NetworkFormatError(e.what());
  }
}

NetworkConfig load_config(const std::filesystem::path& path) {
  return config_from_json(read_file(path));
}

}  // namespace bsclust
