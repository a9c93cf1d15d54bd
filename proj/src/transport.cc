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

#include "milpdist/transport.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "milpdist/error.h"

namespace milpdist {
namespace {

struct BasicCell {
  std::size_t row;
  std::size_t col;
  double flow;
};

class TransportSimplex {
 public:
  TransportSimplex(const TransportProblem& p, std::vector<std::size_t> rows,
                   std::vector<std::size_t> cols)
      : p_(p), rows_(std::move(rows)), cols_(std::move(cols)),
        n_(rows_.size()), m_(cols_.size()) {
    max_cost_ = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        max_cost_ = std::max(max_cost_, Cost(i, j));
      }
    }
  }

  std::vector<BasicCell> Solve() {
    InitialBasis();
    const double eps = 1e-12 * (1.0 + max_cost_);
    std::size_t degenerate_run = 0;
    bool bland = false;
    const std::size_t max_iterations = 1000 * (n_ + m_) * (n_ + m_) + 1000;
    for (std::size_t iter = 0; iter < max_iterations; ++iter) {
      ComputeTree();
      std::size_t enter_i = 0, enter_j = 0;
      if (!FindEntering(eps, bland, &enter_i, &enter_j)) return basis_;
      if (Pivot(enter_i, enter_j) == 0.0) {
        if (++degenerate_run > 50 * (n_ + m_)) bland = true;
      } else {
        degenerate_run = 0;
      }
    }
    throw Error(ErrorCode::kInvalidArgument,
                "transportation simplex did not converge");
  }

 private:
  double Cost(std::size_t i, std::size_t j) const {
    return p_.Cost(rows_[i], cols_[j]);
  }

  void InitialBasis() {
    std::vector<std::size_t> order(n_ * m_);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const double ca = Cost(a / m_, a % m_);
      const double cb = Cost(b / m_, b % m_);
      return ca != cb ? ca < cb : a < b;
    });
    std::vector<double> ra(n_), rb(m_);
    for (std::size_t i = 0; i < n_; ++i) ra[i] = p_.source_mass[rows_[i]];
    for (std::size_t j = 0; j < m_; ++j) rb[j] = p_.sink_mass[cols_[j]];
    std::vector<bool> row_open(n_, true), col_open(m_, true);
    std::size_t open_rows = n_, open_cols = m_;
    is_basic_.assign(n_ * m_, false);
    for (std::size_t cell : order) {
      if (open_rows == 0) break;
      const std::size_t i = cell / m_, j = cell % m_;
      if (!row_open[i] || !col_open[j]) continue;
      const double x = std::min(ra[i], rb[j]);
      const bool row_done = ra[i] == x;
      ra[i] -= x;
      rb[j] -= x;
      basis_.push_back({i, j, x});
      is_basic_[cell] = true;
      // Close exactly one line per allocation so the basis is a spanning
      // tree with n + m - 1 cells.
      if (open_rows == 1 && open_cols == 1) {
        row_open[i] = col_open[j] = false;
        open_rows = open_cols = 0;
      } else if (open_cols == 1 || (open_rows > 1 && row_done)) {
        row_open[i] = false;
        --open_rows;
      } else {
        col_open[j] = false;
        --open_cols;
      }
    }
  }

  // Potentials u (rows) and v (cols) with u_i + v_j = c_ij on basic cells,
  // plus parent pointers of the basis tree rooted at row 0.
  void ComputeTree() {
    const std::size_t nodes = n_ + m_;
    adjacency_.assign(nodes, {});
    for (std::size_t e = 0; e < basis_.size(); ++e) {
      adjacency_[basis_[e].row].push_back(e);
      adjacency_[n_ + basis_[e].col].push_back(e);
    }
    potential_.assign(nodes, 0.0);
    parent_edge_.assign(nodes, kNone);
    depth_.assign(nodes, kNone);
    std::vector<std::size_t> queue{0};
    depth_[0] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const std::size_t u = queue[q];
      for (std::size_t e : adjacency_[u]) {
        const BasicCell& c = basis_[e];
        const std::size_t row_node = c.row, col_node = n_ + c.col;
        const std::size_t v = u == row_node ? col_node : row_node;
        if (depth_[v] != kNone) continue;
        depth_[v] = depth_[u] + 1;
        parent_edge_[v] = e;
        potential_[v] = Cost(c.row, c.col) - potential_[u];
        queue.push_back(v);
      }
    }
  }

  bool FindEntering(double eps, bool bland, std::size_t* ei,
                    std::size_t* ej) const {
    double best = -eps;
    bool found = false;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        if (is_basic_[i * m_ + j]) continue;
        const double rc = Cost(i, j) - potential_[i] - potential_[n_ + j];
        if (rc < best) {
          *ei = i;
          *ej = j;
          found = true;
          if (bland) return true;
          best = rc;
        }
      }
    }
    return found;
  }

  std::size_t Other(std::size_t edge, std::size_t node) const {
    const BasicCell& c = basis_[edge];
    return node == c.row ? n_ + c.col : c.row;
  }

  // Returns the step length.
  double Pivot(std::size_t ei, std::size_t ej) {
    // Tree path between col node (n + ej) and row node ei.
    std::vector<std::size_t> from_col, from_row;
    std::size_t a = n_ + ej, b = ei;
    while (depth_[a] > depth_[b]) {
      from_col.push_back(parent_edge_[a]);
      a = Other(parent_edge_[a], a);
    }
    while (depth_[b] > depth_[a]) {
      from_row.push_back(parent_edge_[b]);
      b = Other(parent_edge_[b], b);
    }
    while (a != b) {
      from_col.push_back(parent_edge_[a]);
      a = Other(parent_edge_[a], a);
      from_row.push_back(parent_edge_[b]);
      b = Other(parent_edge_[b], b);
    }
    std::vector<std::size_t> cycle = std::move(from_col);
    cycle.insert(cycle.end(), from_row.rbegin(), from_row.rend());
    // Cells at even positions lose flow, odd positions gain it.
    double theta = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < cycle.size(); k += 2) {
      theta = std::min(theta, basis_[cycle[k]].flow);
    }
    std::size_t leaving = kNone;
    std::size_t leaving_index = kNone;
    for (std::size_t k = 0; k < cycle.size(); k += 2) {
      const BasicCell& c = basis_[cycle[k]];
      const std::size_t index = c.row * m_ + c.col;
      if (c.flow == theta && index < leaving_index) {
        leaving = cycle[k];
        leaving_index = index;
      }
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      BasicCell& c = basis_[cycle[k]];
      c.flow = k % 2 == 0 ? c.flow - theta : c.flow + theta;
    }
    is_basic_[leaving_index] = false;
    basis_[leaving] = {ei, ej, theta};
    is_basic_[ei * m_ + ej] = true;
    return theta;
  }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  const TransportProblem& p_;
  std::vector<std::size_t> rows_, cols_;
  std::size_t n_, m_;
  double max_cost_ = 0.0;
  std::vector<BasicCell> basis_;
  std::vector<bool> is_basic_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<double> potential_;
  std::vector<std::size_t> parent_edge_;
  std::vector<std::size_t> depth_;
};

std::vector<std::size_t> PositiveIndices(const std::vector<double>& mass) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mass.size(); ++i) {
    if (mass[i] > 0.0) out.push_back(i);
  }
  return out;
}

}  // namespace

void TransportProblem::Validate() const {
  if (cost.size() != source_mass.size() * sink_mass.size()) {
    throw Error(ErrorCode::kInvalidArgument, "cost matrix has the wrong size");
  }
  double total_source = 0.0, total_sink = 0.0;
  for (double v : source_mass) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "invalid source mass");
    }
    total_source += v;
  }
  for (double v : sink_mass) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "invalid sink mass");
    }
    total_sink += v;
  }
  for (double c : cost) {
    if (!std::isfinite(c) || c < 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "costs must be finite and non-negative");
    }
  }
  if (std::abs(total_source - total_sink) > kMarginalTolerance) {
    throw Error(ErrorCode::kInfeasibleMarginals,
                "source total " + std::to_string(total_source) +
                    " differs from sink total " + std::to_string(total_sink));
  }
}

TransportSolution SolveTransportExact(const TransportProblem& problem) {
  problem.Validate();
  std::vector<std::size_t> rows = PositiveIndices(problem.source_mass);
  std::vector<std::size_t> cols = PositiveIndices(problem.sink_mass);
  TransportSolution solution;
  if (rows.empty() || cols.empty()) return solution;

  TransportSimplex simplex(problem, rows, cols);
  std::vector<BasicCell> basis = simplex.Solve();
  std::sort(basis.begin(), basis.end(), [](const BasicCell& a, const BasicCell& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (const BasicCell& c : basis) {
    if (c.flow <= 0.0) continue;
    const std::size_t source = rows[c.row], sink = cols[c.col];
    solution.flow.push_back({source, sink, c.flow});
    solution.total_cost += problem.Cost(source, sink) * c.flow;
  }
  return solution;
}

double GreedyTransport(const TransportProblem& problem,
                       std::span<const std::uint64_t> source_keys,
                       std::span<const std::uint64_t> sink_keys) {
  problem.Validate();
  if (source_keys.size() != problem.num_sources() ||
      sink_keys.size() != problem.num_sinks()) {
    throw Error(ErrorCode::kInvalidArgument, "tie keys do not match problem size");
  }
  // Dense ranks keep the sort records small.
  std::vector<std::uint64_t> dict(source_keys.begin(), source_keys.end());
  dict.insert(dict.end(), sink_keys.begin(), sink_keys.end());
  std::sort(dict.begin(), dict.end());
  dict.erase(std::unique(dict.begin(), dict.end()), dict.end());
  auto rank_of = [&](std::uint64_t key) {
    return static_cast<std::uint32_t>(
        std::lower_bound(dict.begin(), dict.end(), key) - dict.begin());
  };
  std::vector<std::uint32_t> ra_key(problem.num_sources()), rb_key(problem.num_sinks());
  for (std::size_t i = 0; i < ra_key.size(); ++i) ra_key[i] = rank_of(source_keys[i]);
  for (std::size_t j = 0; j < rb_key.size(); ++j) rb_key[j] = rank_of(sink_keys[j]);

  struct Cell {
    double cost;
    std::uint64_t pair;  // (min rank << 32) | max rank
    std::uint32_t source_key;
    std::uint32_t source, sink;
  };
  std::vector<Cell> cells;
  cells.reserve(problem.num_sources() * problem.num_sinks());
  for (std::size_t i = 0; i < problem.num_sources(); ++i) {
    if (problem.source_mass[i] <= 0.0) continue;
    for (std::size_t j = 0; j < problem.num_sinks(); ++j) {
      if (problem.sink_mass[j] <= 0.0) continue;
      const std::uint64_t a = ra_key[i], b = rb_key[j];
      cells.push_back({problem.Cost(i, j), (std::min(a, b) << 32) | std::max(a, b),
                       ra_key[i], static_cast<std::uint32_t>(i),
                       static_cast<std::uint32_t>(j)});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
    if (x.cost != y.cost) return x.cost < y.cost;
    if (x.pair != y.pair) return x.pair < y.pair;
    if (x.source_key != y.source_key) return x.source_key < y.source_key;
    return x.source != y.source ? x.source < y.source : x.sink < y.sink;
  });

  std::vector<double> ra = problem.source_mass;
  std::vector<double> rb = problem.sink_mass;
  std::size_t open_sources = 0;
  for (double v : ra) open_sources += v > 0.0;
  double total = 0.0;
  std::vector<double> group;
  for (std::size_t k = 0; k < cells.size() && open_sources > 0;) {
    // Cells sharing (cost, lo, hi) touch disjoint rows and columns; their
    // contributions are summed in value order so the direction of the
    // problem cannot change the rounding.
    std::size_t end = k;
    group.clear();
    while (end < cells.size() && cells[end].cost == cells[k].cost &&
           cells[end].pair == cells[k].pair) {
      const Cell& c = cells[end];
      const double x = std::min(ra[c.source], rb[c.sink]);
      if (x > 0.0) {
        ra[c.source] -= x;
        rb[c.sink] -= x;
        if (ra[c.source] == 0.0) --open_sources;
        group.push_back(c.cost * x);
      }
      ++end;
    }
    std::sort(group.begin(), group.end());
    double group_sum = 0.0;
    for (double v : group) group_sum += v;
    total += group_sum;
    k = end;
  }
  return total;
}

}  // namespace milpdist
