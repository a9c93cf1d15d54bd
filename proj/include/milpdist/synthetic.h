// Copyright 2026 The milpdist Authors
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

#ifndef MILPDIST_SYNTHETIC_H_
#define MILPDIST_SYNTHETIC_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "milpdist/mps.h"

namespace milpdist {

enum class Family { kBinPacking, kKnapsack, kSetCover };

std::string_view ToString(Family family);
// "binpacking", "knapsack" or "setcover".
Family ParseFamily(std::string_view text);

struct SizeParams {
  int items = 20;  // items (bin packing, knapsack) or elements (set cover)
  int bins = 5;    // bins (bin packing) or candidate sets (set cover)
};

inline constexpr int kMinItems = 5;
inline constexpr int kMaxItems = 200;
inline constexpr int kMinBins = 2;
inline constexpr int kMaxBins = 50;

// Deterministic for a fixed seed. Families:
//   BinPacking: per item  -sum_k x_ik <= -1, per bin  sum_i w_i x_ik - C y_k <= 0,
//               minimize sum_k y_k.
//   Knapsack:   one row sum_i w_i x_i <= C, maximize sum_i p_i x_i.
//   SetCover:   per element  -sum_{S covers e} x_S <= -1, minimize sum_S c_S x_S.
// All variables are binary. Throws kBadSizeParams outside the ranges above
// (bins is ignored for Knapsack).
CanonicalInstance GenerateSynthetic(Family family, const SizeParams& size,
                                    std::uint64_t seed);

struct CorpusInstance {
  CanonicalInstance instance;
  Family family;
  bool is_test = false;
};

// per_family instances of each family with item counts spread evenly over
// [10, 80]; `tests_per_family` of them, picked at random, form the test split.
std::vector<CorpusInstance> GenerateCorpus(std::span<const Family> families,
                                           int per_family, int tests_per_family,
                                           std::uint64_t seed);

}  // namespace milpdist

#endif  // MILPDIST_SYNTHETIC_H_
