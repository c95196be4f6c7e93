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

#ifndef BSCLUST_RNG_HPP_
#define BSCLUST_RNG_HPP_

#include <cstdint>
#include <random>

namespace bsclust {

// Portable random stream for scenario generation.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Its seed is splitmix64(seed) so that neighbouring seeds
// (base_seed + realization index) give unrelated streams. The distribution
// transforms are written out here rather than taken from <random>, whose
// distributions are implementation-defined:
//   uniform01: (x >> 11) * 2^-53, in [0, 1)
//   normal:    Box-Muller, cosine branch only, two engine draws per sample
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64() { return engine_(); }
  double uniform01();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  double normal(double mean, double stddev);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace bsclust

#endif  // BSCLUST_RNG_HPP_
