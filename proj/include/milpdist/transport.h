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

#ifndef MILPDIST_TRANSPORT_H_
#define MILPDIST_TRANSPORT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace milpdist {

// Largest tolerated difference between the source and sink totals.
inline constexpr double kMarginalTolerance = 1e-9;

// Balanced transportation problem with a dense source x sink cost matrix.
struct TransportProblem {
  std::vector<double> source_mass;
  std::vector<double> sink_mass;
  std::vector<double> cost;  // row-major, source_mass.size() * sink_mass.size()

  std::size_t num_sources() const { return source_mass.size(); }
  std::size_t num_sinks() const { return sink_mass.size(); }
  double Cost(std::size_t source, std::size_t sink) const {
    return cost[source * sink_mass.size() + sink];
  }

  // Throws kInvalidArgument for malformed data and kInfeasibleMarginals
  // when the totals differ by more than kMarginalTolerance.
  void Validate() const;
};

struct Flow {
  std::size_t source = 0;
  std::size_t sink = 0;
  double mass = 0.0;
};

struct TransportSolution {
  double total_cost = 0.0;
  std::vector<Flow> flow;  // positive entries, sorted by (source, sink)
};

// Minimum-cost flow by the transportation simplex method: least-cost
// initial basis, Dantzig pricing, lowest-index leaving arc on ties, and
// Bland's rule after a long run of degenerate pivots.
TransportSolution SolveTransportExact(const TransportProblem& problem);

// Repeatedly moves min(remaining source, remaining sink) along the cheapest
// open cell. Cells are ordered by (cost, min key, max key) over the keys of
// their two endpoints, so the transposed problem with swapped keys follows
// the same sequence and yields a bit-identical total.
double GreedyTransport(const TransportProblem& problem,
                       std::span<const std::uint64_t> source_keys,
                       std::span<const std::uint64_t> sink_keys);

}  // namespace milpdist

#endif  // MILPDIST_TRANSPORT_H_
