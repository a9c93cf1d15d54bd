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

#include "milpdist/distance.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "milpdist/error.h"
#include "milpdist/parallel.h"

namespace milpdist {
namespace {

constexpr int kCells = kNumPairKeys * kNumPairKeys;

int LowestBit(unsigned __int128 v) {
  const auto low = static_cast<std::uint64_t>(v);
  return low != 0 ? std::countr_zero(low)
                  : 64 + std::countr_zero(static_cast<std::uint64_t>(v >> 64));
}

// Ranks of both key lists within their sorted union; equal keys share a rank.
void UnionRanks(const std::vector<std::string>& a,
                const std::vector<std::string>& b,
                std::vector<std::uint64_t>* rank_a,
                std::vector<std::uint64_t>* rank_b) {
  rank_a->resize(a.size());
  rank_b->resize(b.size());
  std::size_t i = 0, j = 0;
  std::uint64_t rank = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      (*rank_a)[i++] = rank++;
    } else if (i == a.size() || b[j] < a[i]) {
      (*rank_b)[j++] = rank++;
    } else {
      (*rank_a)[i++] = rank;
      (*rank_b)[j++] = rank++;
    }
  }
}

}  // namespace

std::string_view ToString(Mode mode) {
  return mode == Mode::kExact ? "exact" : "greedy";
}

Mode ParseMode(std::string_view text) {
  if (text == "exact") return Mode::kExact;
  if (text == "greedy") return Mode::kGreedy;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown mode '" + std::string(text) + "' (expected exact|greedy)");
}

double PairGroundDistance(PairKey a, PairKey b, const DistanceParams& params) {
  return (a.weight != b.weight ? params.alpha : 0.0) +
         (a.var != b.var ? params.beta : 0.0);
}

DistanceEvaluator::DistanceEvaluator(const DistanceParams& params, Mode mode)
    : params_(params), mode_(mode) {
  params_.Validate();
  for (int s = 0; s < kNumPairKeys; ++s) {
    for (int t = 0; t < kNumPairKeys; ++t) {
      pair_cost_[s * kNumPairKeys + t] = PairGroundDistance(
          PairKey::FromIndex(s), PairKey::FromIndex(t), params_);
    }
  }
  // Same ordering as GreedyTransport with the pair index as tie key.
  std::array<int, kCells> order;
  std::iota(order.begin(), order.end(), 0);
  auto sort_key = [&](int cell) {
    const int s = cell / kNumPairKeys, t = cell % kNumPairKeys;
    return std::make_tuple(pair_cost_[cell], std::min(s, t), std::max(s, t), s, t);
  };
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return sort_key(x) < sort_key(y); });
  for (int k = 0; k < kCells; ++k) {
    greedy_order_[k] = static_cast<std::uint8_t>(order[k]);
    const auto bit = static_cast<unsigned __int128>(1) << k;
    greedy_row_mask_[order[k] / kNumPairKeys] |= bit;
    greedy_col_mask_[order[k] % kNumPairKeys] |= bit;
  }
  for (int k = kCells - 1; k >= 0; --k) {
    const auto [c, lo, hi, s, t] = sort_key(order[k]);
    bool same_as_next = false;
    if (k + 1 < kCells) {
      const auto [c2, lo2, hi2, s2, t2] = sort_key(order[k + 1]);
      same_as_next = c == c2 && lo == lo2 && hi == hi2;
    }
    greedy_group_end_[k] =
        same_as_next ? greedy_group_end_[k + 1] : static_cast<std::uint8_t>(k + 1);
  }
}

double DistanceEvaluator::ExactPairTransport(const ConstraintTemplate& a,
                                             const ConstraintTemplate& b) const {
  TransportProblem p;
  for (const auto& e : a.entries()) p.source_mass.push_back(e.proportion.ToDouble());
  for (const auto& e : b.entries()) p.sink_mass.push_back(e.proportion.ToDouble());
  p.cost.reserve(a.entries().size() * b.entries().size());
  for (const auto& ea : a.entries()) {
    for (const auto& eb : b.entries()) {
      p.cost.push_back(pair_cost_[ea.key.index() * kNumPairKeys + eb.key.index()]);
    }
  }
  return SolveTransportExact(p).total_cost;
}

double DistanceEvaluator::GreedyPairTransport(const ConstraintTemplate& a,
                                              const ConstraintTemplate& b) const {
  // Bit r is set while the cell at greedy rank r can still carry mass.
  unsigned __int128 rows = 0, cols = 0;
  for (const auto& e : a.entries()) rows |= greedy_row_mask_[e.key.index()];
  for (const auto& e : b.entries()) cols |= greedy_col_mask_[e.key.index()];
  unsigned __int128 active = rows & cols;
  std::array<double, kNumPairKeys> ra = a.Masses();
  std::array<double, kNumPairKeys> rb = b.Masses();
  double total = 0.0;
  std::array<double, 2> group{};
  while (active != 0) {
    const int end = greedy_group_end_[LowestBit(active)];
    int filled = 0;
    while (active != 0 && LowestBit(active) < end) {
      const int cell = greedy_order_[LowestBit(active)];
      const int s = cell / kNumPairKeys, t = cell % kNumPairKeys;
      const double x = std::min(ra[s], rb[t]);
      ra[s] -= x;
      rb[t] -= x;
      if (ra[s] == 0.0) active &= ~greedy_row_mask_[s];
      if (rb[t] == 0.0) active &= ~greedy_col_mask_[t];
      group[filled++] = pair_cost_[cell] * x;
    }
    // A tie group holds at most the two cells (s, t) and (t, s).
    if (filled == 2 && group[1] < group[0]) std::swap(group[0], group[1]);
    double group_sum = 0.0;
    for (int g = 0; g < filled; ++g) group_sum += group[g];
    total += group_sum;
  }
  return total;
}

double DistanceEvaluator::Constraint(const ConstraintTemplate& a,
                                     const ConstraintTemplate& b) const {
  const double rhs_term = a.rhs() != b.rhs() ? params_.gamma : 0.0;
  if (a.empty() || b.empty()) {
    const double mismatch = a.empty() == b.empty() ? 0.0 : params_.alpha + params_.beta;
    return mismatch + rhs_term;
  }
  const double transport = mode_ == Mode::kExact ? ExactPairTransport(a, b)
                                                 : GreedyPairTransport(a, b);
  return transport + rhs_term;
}

TransportProblem DistanceEvaluator::TemplateProblem(
    const NormalizedInstance& a, const NormalizedInstance& b) const {
  TransportProblem p;
  p.source_mass.reserve(a.templates().size());
  p.sink_mass.reserve(b.templates().size());
  for (const auto& t : a.templates()) p.source_mass.push_back(t.proportion.ToDouble());
  for (const auto& t : b.templates()) p.sink_mass.push_back(t.proportion.ToDouble());
  p.cost.reserve(a.templates().size() * b.templates().size());
  for (const auto& ta : a.templates()) {
    for (const auto& tb : b.templates()) {
      p.cost.push_back(Constraint(ta.constraint, tb.constraint));
    }
  }
  return p;
}

double DistanceEvaluator::Instance(const NormalizedInstance& a,
                                   const NormalizedInstance& b) const {
  const TransportProblem p = TemplateProblem(a, b);
  double transport = 0.0;
  if (mode_ == Mode::kExact) {
    transport = SolveTransportExact(p).total_cost;
  } else {
    std::vector<std::uint64_t> keys_a, keys_b;
    UnionRanks(a.keys(), b.keys(), &keys_a, &keys_b);
    transport = GreedyTransport(p, keys_a, keys_b);
  }
  return transport + params_.zeta * Constraint(a.objective(), b.objective());
}

double ConstraintDistance(const ConstraintTemplate& a,
                          const ConstraintTemplate& b,
                          const DistanceParams& params, Mode mode) {
  return DistanceEvaluator(params, mode).Constraint(a, b);
}

double InstanceDistance(const NormalizedInstance& a,
                        const NormalizedInstance& b,
                        const DistanceParams& params, Mode mode) {
  return DistanceEvaluator(params, mode).Instance(a, b);
}

DistanceMatrix ComputeDistanceMatrix(std::span<const NormalizedInstance> instances,
                                     const DistanceParams& params, Mode mode,
                                     std::size_t jobs) {
  const DistanceEvaluator evaluator(params, mode);
  const std::size_t n = instances.size();
  DistanceMatrix out{n, n, std::vector<double>(n * n, 0.0)};
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  cells.reserve(n * (n - (n > 0)) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);
  }
  // Every task writes its own two slots.
  ParallelFor(cells.size(), jobs, [&](std::size_t k) {
    const auto [i, j] = cells[k];
    const double d = evaluator.Instance(instances[i], instances[j]);
    out.values[i * n + j] = d;
    out.values[j * n + i] = d;
  });
  return out;
}

DistanceMatrix ComputeCrossDistances(std::span<const NormalizedInstance> rows,
                                     std::span<const NormalizedInstance> cols,
                                     const DistanceParams& params, Mode mode,
                                     std::size_t jobs) {
  const DistanceEvaluator evaluator(params, mode);
  DistanceMatrix out{rows.size(), cols.size(),
                     std::vector<double>(rows.size() * cols.size(), 0.0)};
  ParallelFor(out.values.size(), jobs, [&](std::size_t k) {
    out.values[k] = evaluator.Instance(rows[k / out.cols], cols[k % out.cols]);
  });
  return out;
}

}  // namespace milpdist
