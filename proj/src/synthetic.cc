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

#include "milpdist/synthetic.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "milpdist/error.h"

namespace milpdist {
namespace {

// Uniform integer in [lo, hi] by rejection; unlike the standard
// distributions this is identical across standard library implementations.
int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return lo + static_cast<int>(draw % span);
}

void CheckRange(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi) {
    throw Error(ErrorCode::kBadSizeParams,
                std::string(what) + " = " + std::to_string(value) +
                    " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

std::uint32_t AddBinary(CanonicalInstance& inst, std::string name) {
  inst.variables.push_back(VarClass::kBinary);
  inst.variable_names.push_back(std::move(name));
  return static_cast<std::uint32_t>(inst.variables.size() - 1);
}

CanonicalInstance BinPacking(int items, int bins, std::mt19937_64& rng) {
  constexpr int kCapacity = 100;
  CanonicalInstance inst;
  std::vector<std::vector<std::uint32_t>> x(items);
  for (int i = 0; i < items; ++i) {
    for (int k = 0; k < bins; ++k) {
      x[i].push_back(AddBinary(inst, "x" + std::to_string(i) + "_" + std::to_string(k)));
    }
  }
  std::vector<std::uint32_t> y;
  for (int k = 0; k < bins; ++k) y.push_back(AddBinary(inst, "y" + std::to_string(k)));
  std::vector<int> weight(items);
  for (int& w : weight) w = UniformInt(rng, 10, 60);

  for (int k = 0; k < bins; ++k) inst.objective.push_back({y[k], 1.0});
  for (int i = 0; i < items; ++i) {
    LinearConstraint row{{}, -1.0};
    for (int k = 0; k < bins; ++k) row.terms.push_back({x[i][k], -1.0});
    inst.constraints.push_back(std::move(row));
  }
  for (int k = 0; k < bins; ++k) {
    LinearConstraint row{{}, 0.0};
    for (int i = 0; i < items; ++i) {
      row.terms.push_back({x[i][k], static_cast<double>(weight[i])});
    }
    row.terms.push_back({y[k], -static_cast<double>(kCapacity)});
    inst.constraints.push_back(std::move(row));
  }
  return inst;
}

CanonicalInstance Knapsack(int items, std::mt19937_64& rng) {
  CanonicalInstance inst;
  LinearConstraint row{{}, 0.0};
  double total_weight = 0.0;
  for (int i = 0; i < items; ++i) {
    const std::uint32_t v = AddBinary(inst, "x" + std::to_string(i));
    const int w = UniformInt(rng, 10, 100);
    const int p = UniformInt(rng, 10, 100);
    row.terms.push_back({v, static_cast<double>(w)});
    inst.objective.push_back({v, -static_cast<double>(p)});
    total_weight += w;
  }
  row.rhs = std::floor(total_weight / 2);
  inst.constraints.push_back(std::move(row));
  return inst;
}

CanonicalInstance SetCover(int elements, int sets, std::mt19937_64& rng) {
  CanonicalInstance inst;
  std::vector<std::uint32_t> x;
  for (int s = 0; s < sets; ++s) {
    x.push_back(AddBinary(inst, "s" + std::to_string(s)));
    inst.objective.push_back({x.back(), static_cast<double>(UniformInt(rng, 1, 100))});
  }
  for (int e = 0; e < elements; ++e) {
    LinearConstraint row{{}, -1.0};
    for (int s = 0; s < sets; ++s) {
      if (UniformInt(rng, 0, 99) < 30) row.terms.push_back({x[s], -1.0});
    }
    if (row.terms.empty()) row.terms.push_back({x[UniformInt(rng, 0, sets - 1)], -1.0});
    inst.constraints.push_back(std::move(row));
  }
  return inst;
}

}  // namespace

std::string_view ToString(Family family) {
  switch (family) {
    case Family::kBinPacking: return "binpacking";
    case Family::kKnapsack: return "knapsack";
    case Family::kSetCover: return "setcover";
  }
  return "?";
}

Family ParseFamily(std::string_view text) {
  if (text == "binpacking") return Family::kBinPacking;
  if (text == "knapsack") return Family::kKnapsack;
  if (text == "setcover") return Family::kSetCover;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown family '" + std::string(text) +
                  "' (expected binpacking|knapsack|setcover)");
}

CanonicalInstance GenerateSynthetic(Family family, const SizeParams& size,
                                    std::uint64_t seed) {
  CheckRange(size.items, kMinItems, kMaxItems, "items");
  if (family != Family::kKnapsack) CheckRange(size.bins, kMinBins, kMaxBins, "bins");
  std::mt19937_64 rng(seed);
  CanonicalInstance inst;
  switch (family) {
    case Family::kBinPacking: inst = BinPacking(size.items, size.bins, rng); break;
    case Family::kKnapsack: inst = Knapsack(size.items, rng); break;
    case Family::kSetCover: inst = SetCover(size.items, size.bins, rng); break;
  }
  inst.name = std::string(ToString(family)) + "_n" + std::to_string(size.items) +
              (family == Family::kKnapsack ? "" : "_b" + std::to_string(size.bins)) +
              "_s" + std::to_string(seed);
  return inst;
}

std::vector<CorpusInstance> GenerateCorpus(std::span<const Family> families,
                                           int per_family, int tests_per_family,
                                           std::uint64_t seed) {
  if (per_family < 1 || tests_per_family < 0 || tests_per_family >= per_family) {
    throw Error(ErrorCode::kBadSizeParams,
                "need 0 <= tests per family < instances per family");
  }
  std::mt19937_64 rng(seed);
  std::vector<CorpusInstance> out;
  for (Family family : families) {
    std::vector<int> order(per_family);
    std::iota(order.begin(), order.end(), 0);
    for (int i = per_family - 1; i > 0; --i) std::swap(order[i], order[UniformInt(rng, 0, i)]);
    std::vector<bool> is_test(per_family, false);
    for (int t = 0; t < tests_per_family; ++t) is_test[order[t]] = true;
    for (int i = 0; i < per_family; ++i) {
      SizeParams size;
      size.items = per_family == 1 ? 10 : 10 + (70 * i) / (per_family - 1);
      const int spread = UniformInt(rng, -1, 1);
      if (family == Family::kSetCover) {
        size.bins = std::clamp(size.items / 2 + spread, kMinBins, kMaxBins);
      } else {
        size.bins = std::clamp(size.items / 4 + spread, kMinBins, kMaxBins);
      }
      const std::uint64_t instance_seed = rng();
      out.push_back({GenerateSynthetic(family, size, instance_seed), family, is_test[i]});
    }
  }
  return out;
}

}  // namespace milpdist
