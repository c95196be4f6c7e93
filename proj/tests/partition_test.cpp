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

#include "bsclust/partition.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"

namespace bsclust {
namespace {

std::vector<int> symbols_of(std::string_view text) {
  const auto rgs = RestrictedGrowthString::parse(text);
  const auto s = rgs.symbols();
  return {s.begin(), s.end()};
}

TEST(IsValidRgsTest, GrowthRule) {
  EXPECT_TRUE(is_valid_rgs(std::vector{1, 2, 1, 3}));
  EXPECT_FALSE(is_valid_rgs(std::vector{1, 1, 1, 3}));
  EXPECT_TRUE(is_valid_rgs(std::vector{1}));
  EXPECT_FALSE(is_valid_rgs(std::vector{2}));
  EXPECT_FALSE(is_valid_rgs(std::vector<int>{}));
  EXPECT_FALSE(is_valid_rgs(std::vector{1, 0}));
}

TEST(RgsTest, ToPartition) {
  EXPECT_EQ(rgs_to_partition(RestrictedGrowthString::parse("1213")).to_string(),
            "{{1,3},{2},{4}}");
  EXPECT_EQ(rgs_to_partition(RestrictedGrowthString::parse("1111")).to_string(),
            "{{1,2,3,4}}");
  EXPECT_EQ(rgs_to_partition(RestrictedGrowthString::parse("123")).to_string(),
            "{{1},{2},{3}}");
  EXPECT_THROW(RestrictedGrowthString::parse("1113"), std::invalid_argument);
}

TEST(RgsTest, FromPartition) {
  EXPECT_EQ(partition_to_rgs(SetPartition({{0, 2}, {1}, {3}}, 4)).to_string(),
            "1213");
  // Cluster order does not matter.
  EXPECT_EQ(partition_to_rgs(SetPartition({{1}, {0, 2}}, 3)).to_string(), "121");
  EXPECT_EQ(partition_to_rgs(SetPartition({{0}}, 1)).to_string(), "1");
}

TEST(SetPartitionTest, RejectsInvalidClusters) {
  EXPECT_THROW(SetPartition({{0, 1}, {1, 2}}, 3), std::invalid_argument);
  EXPECT_THROW(SetPartition({{0, 1}, {}, {2}}, 3), std::invalid_argument);
  EXPECT_THROW(SetPartition({{0, 1}}, 3), std::invalid_argument);
  EXPECT_THROW(SetPartition({{0, 3}}, 2), std::invalid_argument);
}

TEST(SetPartitionTest, Lookup) {
  const SetPartition s(RestrictedGrowthString::parse("1213"));
  EXPECT_EQ(s.cluster_of(2), s.cluster_of(0));
  EXPECT_EQ(s.cluster_of(1).to_vector(), std::vector<int>{1});
  EXPECT_EQ(s.largest_cluster(), 2);
  EXPECT_TRUE(s.respects_max_size(2));
  EXPECT_FALSE(s.respects_max_size(1));
}

TEST(RgsTextTest, CommaFormAboveNine) {
  std::vector<int> s(11);
  std::iota(s.begin(), s.end(), 1);
  const RestrictedGrowthString rgs(s);
  EXPECT_EQ(rgs.to_string(), "1,2,3,4,5,6,7,8,9,10,11");
  EXPECT_EQ(RestrictedGrowthString::parse(rgs.to_string()), rgs);
  EXPECT_THROW(RestrictedGrowthString::parse("1,x"), std::invalid_argument);
}

TEST(EnumerateTest, ThreeCellsInLexicographicOrder) {
  std::vector<std::string> got;
  for (const auto& r : enumerate_partitions(3)) got.push_back(r.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"111", "112", "121", "122", "123"}));
}

TEST(EnumerateTest, MatchesLabellingOracle) {
  for (int n = 1; n <= 7; ++n) {
    const auto expected = oracle::all_partitions_by_labelling(n);
    std::vector<std::vector<int>> got;
    for (const auto& r : enumerate_partitions(n)) {
      got.emplace_back(r.symbols().begin(), r.symbols().end());
    }
    EXPECT_EQ(got, expected) << "n=" << n;
  }
}

TEST(EnumerateTest, CountsAndSizeFilter) {
  EXPECT_EQ(enumerate_partitions(4).size(), 15U);
  EXPECT_EQ(enumerate_partitions(1).size(), 1U);
  for (int n = 1; n <= 7; ++n) {
    for (int d = 1; d <= n; ++d) {
      std::size_t expected = 0;
      for (const auto& s : oracle::all_partitions_by_labelling(n)) {
        if (SetPartition(RestrictedGrowthString(s)).respects_max_size(d)) {
          ++expected;
        }
      }
      const auto got = enumerate_partitions(n, d);
      EXPECT_EQ(got.size(), expected) << n << " " << d;
      for (const auto& r : got) {
        EXPECT_TRUE(SetPartition(r).respects_max_size(d));
      }
    }
  }
}

TEST(EnumerateTest, PrefixCompletions) {
  PartitionEnumerator e(4, std::nullopt, {1, 2});
  std::vector<std::string> got;
  while (e.next()) got.push_back(format_rgs(e.symbols()));
  EXPECT_EQ(got, (std::vector<std::string>{"1211", "1212", "1213", "1221",
                                           "1222", "1223", "1231", "1232",
                                           "1233", "1234"}));
  // A prefix that already breaks the size limit yields nothing.
  PartitionEnumerator none(4, 1, {1, 1});
  EXPECT_FALSE(none.next());
  // A complete prefix yields itself once.
  PartitionEnumerator self(3, std::nullopt, {1, 2, 1});
  ASSERT_TRUE(self.next());
  EXPECT_EQ(format_rgs(self.symbols()), "121");
  EXPECT_FALSE(self.next());
}

TEST(RoundTripTest, ExhaustiveUpToEight) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& r : enumerate_partitions(n)) {
      ASSERT_EQ(partition_to_rgs(rgs_to_partition(r)), r);
    }
  }
}

TEST(BellTest, KnownValues) {
  EXPECT_EQ(bell_number(0), 1);
  EXPECT_EQ(bell_number(4), 15);
  EXPECT_EQ(bell_number(10), 115975);
  EXPECT_EQ(bell_number(16), BigInt("10480142147"));
  const std::vector<std::int64_t> first17{
      1,         1,         2,          5,           15,
      52,        203,       877,        4140,        21147,
      115975,    678570,    4213597,    27644437,    190899322,
      1382958545, 10480142147};
  for (int n = 0; n < 17; ++n) EXPECT_EQ(bell_number(n), first17[n]) << n;
  BigInt sum = 0;
  for (int n = 1; n <= 16; ++n) sum += bell_number(n);
  EXPECT_EQ(sum, BigInt("12086679035"));
  // Beyond 64 bits.
  EXPECT_GT(bell_number(30), BigInt("18446744073709551615"));
}

TEST(BellTest, EnumerationCountUpToTen) {
  for (int n = 1; n <= 10; ++n) {
    std::int64_t count = 0;
    PartitionEnumerator e(n);
    while (e.next()) ++count;
    EXPECT_EQ(bell_number(n), count) << n;
  }
}

TEST(CompletionCountTest, MatchesRecursion) {
  EXPECT_EQ(completion_count(3, 1), 15.0);  // B_4
  for (const char* prefix : {"1", "12", "121", "1213", "11"}) {
    const auto s = symbols_of(prefix);
    double expected = 0;
    oracle::for_each_completion(s, 6, [&](const std::vector<int>&) { ++expected; });
    const int labels = *std::max_element(s.begin(), s.end());
    EXPECT_EQ(completion_count(6 - static_cast<int>(s.size()), labels), expected);
  }
}

TEST(PartialRgsTest, Views) {
  const PartialRgs p({1, 2, 1}, 5);
  EXPECT_EQ(p.constrained().to_vector(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(p.unconstrained().to_vector(), (std::vector<int>{3, 4}));
  EXPECT_EQ(p.cluster_of(2).to_vector(), (std::vector<int>{0, 2}));
  EXPECT_EQ(p.open_cells(2).to_vector(), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(p.extended(3).to_string(), "1213");
  EXPECT_THROW(p.extended(4), std::invalid_argument);
  EXPECT_THROW(PartialRgs({1, 2, 1}, 2), std::invalid_argument);
  EXPECT_THROW(PartialRgs({1, 1}, 2).extended(1), std::logic_error);
}

}  // namespace
}  // namespace bsclust
