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

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace bsclust {

std::vector<int> CellSet::to_vector() const {
  std::vector<int> cells;
  cells.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    cells.push_back(std::countr_zero(m));
  }
  return cells;
}

bool is_valid_rgs(std::span<const int> symbols) {
  if (symbols.empty() || symbols.front() != 1) return false;
  int max_label = 0;
  for (int s : symbols) {
    if (s < 1 || s > max_label + 1) return false;
    max_label = std::max(max_label, s);
  }
  return true;
}

std::string format_rgs(std::span<const int> symbols) {
  const bool compact = std::all_of(symbols.begin(), symbols.end(),
                                   [](int s) { return s >= 0 && s <= 9; });
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(symbols[i]);
  }
  return out;
}

namespace {

int count_labels(std::span<const int> symbols) {
  return symbols.empty() ? 0 : *std::max_element(symbols.begin(), symbols.end());
}

}  // namespace

RestrictedGrowthString::RestrictedGrowthString(std::vector<int> symbols)
    : symbols_(std::move(symbols)) {
  if (!is_valid_rgs(symbols_)) {
    throw std::invalid_argument("invalid restricted growth string: " +
                                format_rgs(symbols_));
  }
  if (symbols_.size() > static_cast<std::size_t>(kMaxCells)) {
    throw std::invalid_argument("restricted growth string longer than 64");
  }
  num_clusters_ = count_labels(symbols_);
}

RestrictedGrowthString RestrictedGrowthString::parse(std::string_view text) {
  std::vector<int> symbols;
  auto parse_int = [&](std::string_view token) {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed restricted growth string: " +
                                  std::string(text));
    }
    symbols.push_back(value);
  };
  if (text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      parse_int(text.substr(i, 1));
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      parse_int(text.substr(start, end - start));
      start = end + 1;
    }
  }
  return RestrictedGrowthString(std::move(symbols));
}

PartialRgs::PartialRgs(int total_cells) : PartialRgs({1}, total_cells) {}

PartialRgs::PartialRgs(std::vector<int> symbols, int total_cells)
    : symbols_(std::move(symbols)), total_cells_(total_cells) {
  if (total_cells_ < 1 || total_cells_ > kMaxCells) {
    throw std::invalid_argument("cell count must be in [1, 64]");
  }
  if (!is_valid_rgs(symbols_) || length() > total_cells_) {
    throw std::invalid_argument("invalid partial restricted growth string: " +
                                format_rgs(symbols_));
  }
  members_.resize(count_labels(symbols_));
  for (int cell = 0; cell < length(); ++cell) {
    members_[symbols_[cell] - 1].insert(cell);
  }
}

CellSet PartialRgs::open_cells(int max_size) const {
  CellSet open = unconstrained();
  for (CellSet c : members_) {
    if (c.size() < max_size) open = open | c;
  }
  return open;
}

int PartialRgs::largest_cluster() const {
  int largest = 0;
  for (CellSet c : members_) largest = std::max(largest, c.size());
  return largest;
}

PartialRgs PartialRgs::extended(int label) const {
  if (is_complete()) {
    throw std::logic_error("cannot extend a complete string");
  }
  if (label < 1 || label > max_label() + 1) {
    throw std::invalid_argument("label violates the growth rule");
  }
  PartialRgs child;
  child.total_cells_ = total_cells_;
  child.symbols_ = symbols_;
  child.symbols_.push_back(label);
  child.members_ = members_;
  if (label > max_label()) child.members_.emplace_back();
  child.members_[label - 1].insert(length());
  return child;
}

RestrictedGrowthString PartialRgs::to_rgs() const {
  if (!is_complete()) {
    throw std::logic_error("partial string is not complete");
  }
  return RestrictedGrowthString(symbols_);
}

SetPartition::SetPartition(std::vector<std::vector<int>> clusters,
                           int num_cells) {
  if (num_cells < 1 || num_cells > kMaxCells) {
    throw std::invalid_argument("cell count must be in [1, 64]");
  }
  CellSet seen;
  std::vector<CellSet> sets;
  for (const auto& cluster : clusters) {
    if (cluster.empty()) throw std::invalid_argument("empty cluster");
    CellSet set;
    for (int cell : cluster) {
      if (cell < 0 || cell >= num_cells) {
        throw std::invalid_argument("cell index out of range");
      }
      if (seen.contains(cell) || set.contains(cell)) {
        throw std::invalid_argument("clusters overlap");
      }
      set.insert(cell);
    }
    seen = seen | set;
    sets.push_back(set);
  }
  if (seen != CellSet::first(num_cells)) {
    throw std::invalid_argument("clusters do not cover every cell");
  }
  std::sort(sets.begin(), sets.end(), [](CellSet a, CellSet b) {
    return std::countr_zero(a.mask()) < std::countr_zero(b.mask());
  });
  clusters_ = std::move(sets);
  label_of_.assign(num_cells, 0);
  for (std::size_t c = 0; c < clusters_.size(); ++c) {
    for (int cell : clusters_[c].to_vector()) {
      label_of_[cell] = static_cast<int>(c);
    }
  }
}

SetPartition::SetPartition(const RestrictedGrowthString& rgs) {
  clusters_.resize(rgs.num_clusters());
  label_of_.resize(rgs.size());
  for (int cell = 0; cell < rgs.size(); ++cell) {
    label_of_[cell] = rgs.label(cell) - 1;
    clusters_[label_of_[cell]].insert(cell);
  }
}

int SetPartition::largest_cluster() const {
  int largest = 0;
  for (CellSet c : clusters_) largest = std::max(largest, c.size());
  return largest;
}

RestrictedGrowthString SetPartition::to_rgs() const {
  // Clusters are already ordered by smallest member, which is the order of
  // first appearance.
  std::vector<int> symbols(label_of_.size());
  for (std::size_t cell = 0; cell < label_of_.size(); ++cell) {
    symbols[cell] = label_of_[cell] + 1;
  }
  return RestrictedGrowthString(std::move(symbols));
}

std::string SetPartition::to_string() const {
  std::string out = "{";
  for (std::size_t c = 0; c < clusters_.size(); ++c) {
    if (c > 0) out += ',';
    out += '{';
    bool first = true;
    for (int cell : clusters_[c].to_vector()) {
      if (!first) out += ',';
      out += std::to_string(cell + 1);
      first = false;
    }
    out += '}';
  }
  return out + "}";
}

PartitionEnumerator::PartitionEnumerator(int num_cells,
                                         std::optional<int> max_cluster_size,
                                         std::vector<int> prefix)
    : num_cells_(num_cells),
      max_size_(max_cluster_size.value_or(num_cells)),
      fixed_(static_cast<int>(prefix.size())) {
  if (num_cells < 1) throw std::invalid_argument("need at least one cell");
  if (max_size_ < 1) throw std::invalid_argument("max cluster size must be >= 1");
  if (!is_valid_rgs(prefix) || fixed_ > num_cells) {
    throw std::invalid_argument("invalid enumeration prefix");
  }
  symbols_.assign(num_cells, 0);
  prefix_max_.assign(num_cells, 0);
  counts_.assign(num_cells + 2, 0);
  for (int p = 0; p < fixed_; ++p) {
    place(p, prefix[p]);
    if (counts_[prefix[p]] > max_size_) done_ = true;
  }
}

int PartitionEnumerator::smallest_label(int position) const {
  const int limit = prefix_max_[position - 1] + 1;
  for (int b = 1; b < limit; ++b) {
    if (counts_[b] < max_size_) return b;
  }
  return limit;  // a fresh label always fits
}

void PartitionEnumerator::place(int position, int label) {
  symbols_[position] = label;
  ++counts_[label];
  prefix_max_[position] =
      position == 0 ? label : std::max(prefix_max_[position - 1], label);
}

void PartitionEnumerator::unplace(int position) {
  --counts_[symbols_[position]];
}

bool PartitionEnumerator::fill_from(int position) {
  for (int p = position; p < num_cells_; ++p) place(p, smallest_label(p));
  return true;
}

bool PartitionEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return fill_from(fixed_);
  }
  for (int j = num_cells_ - 1; j >= fixed_; --j) {
    unplace(j);
    const int limit = prefix_max_[j - 1] + 1;
    for (int b = symbols_[j] + 1; b <= limit; ++b) {
      if (counts_[b] < max_size_) {
        place(j, b);
        return fill_from(j + 1);
      }
    }
  }
  done_ = true;
  return false;
}

std::vector<RestrictedGrowthString> enumerate_partitions(
    int num_cells, std::optional<int> max_cluster_size) {
  std::vector<RestrictedGrowthString> out;
  PartitionEnumerator e(num_cells, max_cluster_size);
  while (e.next()) {
    out.emplace_back(std::vector<int>(e.symbols().begin(), e.symbols().end()));
  }
  return out;
}

BigInt bell_number(int n) {
  if (n < 0) throw std::invalid_argument("bell_number of a negative size");
  // Bell triangle: each row starts with the last entry of the previous row.
  std::vector<BigInt> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> next{row.back()};
    next.reserve(row.size() + 1);
    for (const BigInt& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

double completion_count(int remaining, int existing_labels) {
  constexpr int kN = kMaxCells + 1;
  // table[n][m]: strings of n more symbols given m labels already in use.
  static const auto table = [] {
    std::vector<std::array<double, 2 * kN + 1>> t(kN);
    t[0].fill(1.0);
    for (int n = 1; n < kN; ++n) {
      for (int m = 0; m + 1 <= 2 * kN; ++m) {
        t[n][m] = m * t[n - 1][m] + t[n - 1][m + 1];
      }
    }
    return t;
  }();
  if (remaining < 0 || remaining >= kN || existing_labels < 0 ||
      existing_labels > kN) {
    throw std::out_of_range("completion_count argument out of range");
  }
  return table[remaining][existing_labels];
}

}  // namespace bsclust
