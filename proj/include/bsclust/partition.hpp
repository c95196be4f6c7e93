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

// Set partitions of cells and their restricted-growth-string encoding.
//
// Cells are 0-based indices in [0, num_cells). Cluster labels inside a
// restricted growth string are 1-based and appear in order of first use, so
// the string "1213" places cells 0 and 2 together and cells 1 and 3 alone.

#ifndef BSCLUST_PARTITION_HPP_
#define BSCLUST_PARTITION_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bsclust {

// Networks are limited to 64 cells so that a cluster fits in one word.
inline constexpr int kMaxCells = 64;

// A set of cell indices backed by a 64-bit mask.
class CellSet {
 public:
  constexpr CellSet() = default;
  constexpr explicit CellSet(std::uint64_t mask) : mask_(mask) {}

  static constexpr CellSet single(int cell) {
    return CellSet(std::uint64_t{1} << cell);
  }
  // {0, ..., n - 1}
  static constexpr CellSet first(int n) {
    return CellSet(n >= 64 ? ~std::uint64_t{0}
                           : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(int cell) const { return (mask_ >> cell) & 1U; }
  constexpr void insert(int cell) { mask_ |= std::uint64_t{1} << cell; }
  constexpr void erase(int cell) { mask_ &= ~(std::uint64_t{1} << cell); }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::uint64_t mask() const { return mask_; }

  constexpr CellSet operator|(CellSet o) const {
    return CellSet(mask_ | o.mask_);
  }
  constexpr CellSet operator&(CellSet o) const {
    return CellSet(mask_ & o.mask_);
  }
  constexpr CellSet minus(CellSet o) const {
    return CellSet(mask_ & ~o.mask_);
  }
  constexpr bool is_subset_of(CellSet o) const {
    return (mask_ & ~o.mask_) == 0;
  }

  std::vector<int> to_vector() const;

  friend constexpr bool operator==(CellSet, CellSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

// True iff `symbols` is non-empty, starts with 1 and every symbol is at most
// one more than the maximum of its predecessors.
bool is_valid_rgs(std::span<const int> symbols);

// Text form: labels concatenated when all are <= 9 ("1213"), comma-separated
// otherwise ("1,2,10,...").
std::string format_rgs(std::span<const int> symbols);

// A complete restricted growth string; one symbol per cell.
class RestrictedGrowthString {
 public:
  // Throws std::invalid_argument when the growth rule is violated.
  explicit RestrictedGrowthString(std::vector<int> symbols);

  // Accepts either text form produced by format_rgs.
  static RestrictedGrowthString parse(std::string_view text);

  std::span<const int> symbols() const { return symbols_; }
  int size() const { return static_cast<int>(symbols_.size()); }
  int num_clusters() const { return num_clusters_; }
  int label(int cell) const { return symbols_[cell]; }
  std::string to_string() const { return format_rgs(symbols_); }

  friend auto operator<=>(const RestrictedGrowthString&,
                          const RestrictedGrowthString&) = default;

 private:
  std::vector<int> symbols_;
  int num_clusters_ = 0;
};

// Prefix of a restricted growth string: only cells [0, length) are assigned.
// Caches per-label cluster sizes and the membership mask of each label.
class PartialRgs {
 public:
  // Root node "1" of a tree over `total_cells` cells.
  explicit PartialRgs(int total_cells);
  // Throws std::invalid_argument on an invalid prefix or length > total.
  PartialRgs(std::vector<int> symbols, int total_cells);

  std::span<const int> symbols() const { return symbols_; }
  int length() const { return static_cast<int>(symbols_.size()); }
  int total_cells() const { return total_cells_; }
  bool is_complete() const { return length() == total_cells_; }
  int max_label() const { return static_cast<int>(members_.size()); }

  // Assigned cells, i.e. {0, ..., length - 1}.
  CellSet constrained() const { return CellSet::first(length()); }
  // Cells not yet assigned.
  CellSet unconstrained() const {
    return CellSet::first(total_cells_).minus(constrained());
  }
  bool is_constrained(int cell) const { return cell < length(); }

  // Cluster of an assigned cell.
  CellSet cluster_of(int cell) const { return members_[symbols_[cell] - 1]; }
  int cluster_size_of(int cell) const { return cluster_of(cell).size(); }
  CellSet cluster_with_label(int label) const { return members_[label - 1]; }

  // Assigned cells whose cluster has fewer than `max_size` members, plus every
  // unassigned cell (unassigned cells count as singletons).
  CellSet open_cells(int max_size) const;

  // Largest current cluster.
  int largest_cluster() const;

  // Appends label `label` (1 <= label <= max_label() + 1).
  PartialRgs extended(int label) const;

  RestrictedGrowthString to_rgs() const;
  std::string to_string() const { return format_rgs(symbols_); }

  friend bool operator==(const PartialRgs& a, const PartialRgs& b) {
    return a.total_cells_ == b.total_cells_ && a.symbols_ == b.symbols_;
  }

 private:
  PartialRgs() = default;
  std::vector<int> symbols_;
  std::vector<CellSet> members_;
  int total_cells_ = 0;
};

// Disjoint, non-empty clusters covering {0, ..., num_cells - 1}. Stored in
// canonical order: clusters ordered by their smallest cell.
class SetPartition {
 public:
  // Throws std::invalid_argument when clusters overlap, are empty, or do not
  // cover every cell.
  SetPartition(std::vector<std::vector<int>> clusters, int num_cells);
  explicit SetPartition(const RestrictedGrowthString& rgs);

  int num_cells() const { return static_cast<int>(label_of_.size()); }
  int num_clusters() const { return static_cast<int>(clusters_.size()); }
  std::span<const CellSet> clusters() const { return clusters_; }
  CellSet cluster_of(int cell) const { return clusters_[label_of_[cell]]; }
  int largest_cluster() const;
  bool respects_max_size(int max_size) const {
    return largest_cluster() <= max_size;
  }

  RestrictedGrowthString to_rgs() const;
  // 1-based text form, e.g. "{{1,3},{2},{4}}".
  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  std::vector<CellSet> clusters_;
  std::vector<int> label_of_;  // cell -> index into clusters_
};

inline SetPartition rgs_to_partition(const RestrictedGrowthString& rgs) {
  return SetPartition(rgs);
}
inline RestrictedGrowthString partition_to_rgs(const SetPartition& s) {
  return s.to_rgs();
}

// Lexicographic enumeration of restricted growth strings of a fixed length,
// optionally restricted to clusters of at most `max_cluster_size` cells and to
// completions of a fixed prefix. Infeasible branches are skipped while
// enumerating. Single consumer.
//
//   PartitionEnumerator e(4);
//   while (e.next()) use(e.symbols());
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int num_cells,
                               std::optional<int> max_cluster_size = {},
                               std::vector<int> prefix = {1});

  // Advances to the next string; false once exhausted.
  bool next();
  std::span<const int> symbols() const { return symbols_; }

 private:
  bool fill_from(int position);
  int smallest_label(int position) const;
  void place(int position, int label);
  void unplace(int position);

  int num_cells_;
  int max_size_;
  int fixed_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> symbols_;
  std::vector<int> prefix_max_;
  std::vector<int> counts_;  // indexed by label
};

std::vector<RestrictedGrowthString> enumerate_partitions(
    int num_cells, std::optional<int> max_cluster_size = {});

using BigInt = boost::multiprecision::cpp_int;

// Number of set partitions of an n-element set, via the Bell triangle.
BigInt bell_number(int n);

// Number of complete strings below a prefix with `existing_labels` distinct
// labels and `remaining` cells left to assign (no size limit). Double
// precision; exact up to about 2^53.
double completion_count(int remaining, int existing_labels);

}  // namespace bsclust

#endif  // BSCLUST_PARTITION_HPP_
