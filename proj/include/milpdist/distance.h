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

#ifndef MILPDIST_DISTANCE_H_
#define MILPDIST_DISTANCE_H_

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "milpdist/model.h"
#include "milpdist/transport.h"

namespace milpdist {

enum class Mode { kExact, kGreedy };

std::string_view ToString(Mode mode);
// "exact" or "greedy"; throws kInvalidArgument otherwise.
Mode ParseMode(std::string_view text);

// alpha * [weight classes differ] + beta * [variable classes differ].
double PairGroundDistance(PairKey a, PairKey b, const DistanceParams& params);

// Evaluates constraint- and instance-level distances for fixed parameters.
// Precomputes the 9 x 9 pair cost table and the greedy visiting order once;
// instances are immutable, so one evaluator may be shared across threads.
class DistanceEvaluator {
 public:
  DistanceEvaluator(const DistanceParams& params, Mode mode);

  const DistanceParams& params() const { return params_; }
  Mode mode() const { return mode_; }

  // Transport over pair shares plus gamma * [rhs classes differ]. A template
  // without pairs (an empty objective) is at distance alpha + beta from any
  // non-empty template, the largest pair cost.
  double Constraint(const ConstraintTemplate& a,
                    const ConstraintTemplate& b) const;

  // Transport over template shares with Constraint() as ground cost, plus
  // zeta * Constraint(objective a, objective b).
  double Instance(const NormalizedInstance& a,
                  const NormalizedInstance& b) const;

  // The template-level problem used by Instance(), exposed for tests and
  // timing studies.
  TransportProblem TemplateProblem(const NormalizedInstance& a,
                                   const NormalizedInstance& b) const;

 private:
  double ExactPairTransport(const ConstraintTemplate& a,
                            const ConstraintTemplate& b) const;
  double GreedyPairTransport(const ConstraintTemplate& a,
                             const ConstraintTemplate& b) const;

  DistanceParams params_;
  Mode mode_;
  std::array<double, kNumPairKeys * kNumPairKeys> pair_cost_{};
  // Greedy visiting order over (source pair, sink pair) cells, and the end
  // index of the tie group each position belongs to.
  std::array<std::uint8_t, kNumPairKeys * kNumPairKeys> greedy_order_{};
  // Ranks of the cells in each source row / sink column, as bit sets.
  std::array<unsigned __int128, kNumPairKeys> greedy_row_mask_{};
  std::array<unsigned __int128, kNumPairKeys> greedy_col_mask_{};
  std::array<std::uint8_t, kNumPairKeys * kNumPairKeys> greedy_group_end_{};
};

double ConstraintDistance(const ConstraintTemplate& a,
                          const ConstraintTemplate& b,
                          const DistanceParams& params, Mode mode);
double InstanceDistance(const NormalizedInstance& a,
                        const NormalizedInstance& b,
                        const DistanceParams& params, Mode mode);

// Dense row-major matrix of distances.
struct DistanceMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
};

// Symmetric all-pairs matrix with a zero diagonal. Each unordered pair is
// evaluated once, as (i, j) with i < j, and mirrored. `jobs` == 0 uses all
// cores; the result does not depend on the worker count.
DistanceMatrix ComputeDistanceMatrix(std::span<const NormalizedInstance> instances,
                                     const DistanceParams& params, Mode mode,
                                     std::size_t jobs = 0);

// rows x cols matrix of Instance(rows[i], cols[j]).
DistanceMatrix ComputeCrossDistances(std::span<const NormalizedInstance> rows,
                                     std::span<const NormalizedInstance> cols,
                                     const DistanceParams& params, Mode mode,
                                     std::size_t jobs = 0);

}  // namespace milpdist

#endif  // MILPDIST_DISTANCE_H_
