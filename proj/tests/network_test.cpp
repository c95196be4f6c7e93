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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "bsclust/rng.hpp"
#include "json.hpp"

namespace bsclust {
namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bsclust_" + name);
}

TEST(RngTest, DeterministicAndInRange) {
  Rng a(42);
  Rng b(42);
  for (int n = 0; n < 1000; ++n) {
    const double u = a.uniform01();
    EXPECT_EQ(u, b.uniform01());
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  // The engine sequence is fixed by the standard: first output of
  // mt19937_64 seeded with splitmix64(0).
  std::mt19937_64 reference(splitmix64(0));
  EXPECT_EQ(Rng(0).next_u64(), reference());
}

TEST(RngTest, NormalMoments) {
  Rng rng(7);
  double sum = 0, sq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal(0.0, 1.0);
    sum += z;
    sq += z * z;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.01);
}

TEST(PathLossTest, ServingDistance) {
  const NetworkConfig config;
  EXPECT_NEAR(path_loss_db(config, 250.0), 15.3 + 37.6 * std::log10(250.0),
              1e-12);
  EXPECT_NEAR(path_loss_db(config, 250.0), 105.46, 5e-3);
}

TEST(GenerateTest, NoShadowingGivesPathLossGains) {
  NetworkConfig config;
  config.shadow_std_db = 0.0;
  const Network net = generate_network(config, 3);
  const double expected = std::pow(10.0, -path_loss_db(config, 250.0) / 10.0);
  for (int ms = 0; ms < net.num_ms(); ++ms) {
    EXPECT_EQ(net.gain(ms, net.serving_cell(ms)),
              net.gain(0, net.serving_cell(0)));
    EXPECT_NEAR(net.gain(ms, net.serving_cell(ms)) / expected, 1.0, 1e-12);
  }
  EXPECT_NEAR(std::log10(net.gain(0, 0)), -10.546, 1e-3);
}

TEST(GenerateTest, EqualDistanceEqualGain) {
  NetworkConfig config;
  config.shadow_std_db = 0.0;
  const Network net = generate_network(config, 11);
  // MS 0 and MS 1 share a BS and sit at the same distance from it.
  EXPECT_EQ(net.gain(0, 0), net.gain(1, 0));
}

TEST(GenerateTest, GeometryAndInvariants) {
  const NetworkConfig config;
  const Network net = generate_network(config, 5);
  ASSERT_EQ(net.gains_db().size(), 32U * 16U);
  for (int j = 0; j < 16; ++j) {
    EXPECT_GE(net.bs_positions()[j].x, 0.0);
    EXPECT_LT(net.bs_positions()[j].x, 2000.0);
  }
  for (int ms = 0; ms < net.num_ms(); ++ms) {
    const Point& bs = net.bs_positions()[net.serving_cell(ms)];
    const Point& m = net.ms_positions()[ms];
    EXPECT_NEAR(std::hypot(m.x - bs.x, m.y - bs.y), 250.0, 1e-9);
    for (int j = 0; j < net.num_cells(); ++j) {
      EXPECT_GT(net.gain(ms, j), 0.0);
      EXPECT_TRUE(std::isfinite(net.gain(ms, j)));
    }
    EXPECT_GT(net.tx_power(ms), 0.0);
    EXPECT_GT(net.noise_power(ms), 0.0);
  }
}

TEST(GenerateTest, DeterministicInSeed) {
  const NetworkConfig config;
  EXPECT_EQ(generate_network(config, 9), generate_network(config, 9));
  EXPECT_NE(generate_network(config, 9).gains_db(),
            generate_network(config, 10).gains_db());
}

TEST(CalibrateTest, SnrDefinition) {
  NetworkConfig config;
  config.shadow_std_db = 0.0;
  const Network net = generate_network(config, 1);
  const double loss = path_loss_db(config, 250.0);

  const Network zero = calibrate_powers(net, 0.0);
  EXPECT_NEAR(zero.tx_power(0) / std::pow(10.0, loss / 10.0), 1.0, 1e-12);
  EXPECT_EQ(zero.noise_power(0), 1.0);

  const Network twenty = calibrate_powers(net, 20.0);
  EXPECT_NEAR(twenty.snr(0), 100.0, 1e-9);
  EXPECT_NEAR(twenty.tx_power(3) * std::pow(10.0, -loss / 10.0), 100.0, 1e-9);

  const Network doubled = calibrate_powers(net, 20.0, 2.0);
  EXPECT_NEAR(doubled.tx_power(0) / twenty.tx_power(0), 2.0, 1e-12);
  // All MSs of a BS get the same power; the BS total is their sum.
  EXPECT_EQ(twenty.tx_power(0), twenty.tx_power(1));
  EXPECT_EQ(twenty.bs_power(0), twenty.tx_power(0) + twenty.tx_power(1));
}

TEST(PersistenceTest, RoundTrip) {
  NetworkConfig config;
  config.num_cells = 5;
  config.snr_db = 13.5;
  const Network net = generate_network(config, 0xFFFFFFFFFFFFFFF1ULL);
  const auto path = temp_file("roundtrip.json");
  save_network(net, path);
  const Network back = load_network(path);
  EXPECT_EQ(back, net);
  EXPECT_EQ(back.seed(), 0xFFFFFFFFFFFFFFF1ULL);
  EXPECT_EQ(back.config(), config);
  std::filesystem::remove(path);
}

TEST(PersistenceTest, RejectsInvalidValues) {
  NetworkConfig config;
  config.num_cells = 3;
  const Network net = generate_network(config, 1);
  auto doc = nlohmann::json::parse(network_to_json(net));

  auto bad_power = doc;
  bad_power["tx_power"][0] = -1.0;
  EXPECT_THROW(network_from_json(bad_power.dump()), NetworkFormatError);

  auto nan_gain = doc;
  nan_gain["gains_db"][2] = nullptr;  // how NaN is written out
  EXPECT_THROW(network_from_json(nan_gain.dump()), NetworkFormatError);

  auto inf_gain = doc;
  inf_gain["gains_db"][2] = 1e308 * 10;
  EXPECT_THROW(network_from_json(inf_gain.dump()), NetworkFormatError);

  auto version = doc;
  version["schema_version"] = 2;
  EXPECT_THROW(network_from_json(version.dump()), NetworkFormatError);

  auto shape = doc;
  shape["gains_db"].erase(0);
  EXPECT_THROW(network_from_json(shape.dump()), NetworkFormatError);
}

TEST(PersistenceTest, TruncatedFile) {
  NetworkConfig config;
  config.num_cells = 3;
  const std::string text = network_to_json(generate_network(config, 1));
  EXPECT_THROW(network_from_json(text.substr(0, text.size() / 2)),
               NetworkFormatError);
  EXPECT_THROW(load_network(temp_file("does_not_exist.json")),
               std::runtime_error);
}

TEST(ConfigTest, PartialJsonKeepsDefaults) {
  const NetworkConfig c = config_from_json(R"({"num_cells": 6, "snr_db": 10})");
  EXPECT_EQ(c.num_cells, 6);
  EXPECT_EQ(c.snr_db, 10.0);
  EXPECT_EQ(c.max_cluster_size, 4);
  EXPECT_EQ(c.coherence_length, 2700.0);
  EXPECT_THROW(config_from_json(R"({"num_cells": 0})"), NetworkFormatError);
  EXPECT_THROW(config_from_json("{"), NetworkFormatError);
}

}  // namespace
}  // namespace bsclust
