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

// Acceptance suite: prints one PASS/FAIL/SKIP line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "milpdist/distance.h"
#include "milpdist/eval.h"
#include "milpdist/mps.h"
#include "milpdist/normalize.h"
#include "milpdist/synthetic.h"
#include "milpdist/transport.h"
#include "support/oracles.h"

namespace milpdist {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

const DistanceParams kUnit{1.0, 1.0, 1.0, 1.0};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Outcome {
  enum Status { kPass, kFail, kSkip } status = kPass;
  std::string detail;
};

std::string Fmt(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

// ---------------------------------------------------------------------------

Outcome MetricAxioms() {
  const auto start = Clock::now();
  std::mt19937_64 rng(101);
  const DistanceEvaluator ev(kUnit, Mode::kExact);
  long failures = 0;
  double worst_sym = 0.0, worst_slack = 0.0;
  auto check = [&](auto&& d, const auto& x, const auto& y, const auto& z) {
    const double xy = d(x, y), yx = d(y, x), yz = d(y, z), xz = d(x, z);
    failures += d(x, x) != 0.0;
    failures += xy < 0.0 || yz < 0.0 || xz < 0.0;
    worst_sym = std::max(worst_sym, std::abs(xy - yx));
    failures += std::abs(xy - yx) > 1e-9;
    const double slack = xy + yz - xz;
    worst_slack = std::min(worst_slack, slack);
    failures += slack < -1e-9;
  };
  const int kTriples = 1500;
  auto constraint = [&](const ConstraintTemplate& a, const ConstraintTemplate& b) {
    return ev.Constraint(a, b);
  };
  auto instance = [&](const NormalizedInstance& a, const NormalizedInstance& b) {
    return ev.Instance(a, b);
  };
  for (int t = 0; t < kTriples; ++t) {
    // A few objective-style templates (including empty ones) join the pool.
    auto draw = [&] {
      const int kind = testing::RandInt(rng, 0, 19);
      if (kind == 0) return ConstraintTemplate::FromEntries({}, RhsClass::kNoneObjective);
      return testing::RandomTemplate(rng, kind == 1, 7);
    };
    check(constraint, draw(), draw(), draw());
  }
  for (int t = 0; t < kTriples; ++t) {
    const auto x = testing::RandomInstance(rng, 7, 5);
    const auto y = testing::RandomInstance(rng, 7, 5);
    const auto z = testing::RandomInstance(rng, 7, 5);
    check(instance, x, y, z);
  }
  const double secs = Seconds(start);
  Outcome o;
  o.status = failures == 0 && secs < 60.0 ? Outcome::kPass : Outcome::kFail;
  o.detail = Fmt("%d template + %d instance triples, violations=%ld, max |asym|=%.2e, "
                 "min triangle slack=%.2e, %.1fs",
                 kTriples, kTriples, failures, worst_sym, worst_slack, secs);
  return o;
}

// ---------------------------------------------------------------------------

struct RandomProblem {
  std::vector<std::int64_t> supply, demand;
  std::int64_t total = 0;
  TransportProblem problem;
  std::vector<std::uint64_t> source_keys, sink_keys;
};

std::vector<RandomProblem> TransportSet(int count) {
  std::mt19937_64 rng(202);
  std::vector<RandomProblem> set;
  for (int r = 0; r < count; ++r) {
    RandomProblem p;
    const double alpha = r % 2 ? 1.0 : testing::RandInt(rng, 1, 40) / 8.0;
    const double beta = r % 2 ? 1.0 : testing::RandInt(rng, 1, 40) / 8.0;
    const double pool[] = {0.0, alpha, beta, alpha + beta};
    const int n = testing::RandInt(rng, 1, 6), m = testing::RandInt(rng, 1, 6);
    for (int i = 0; i < n; ++i) p.supply.push_back(testing::RandInt(rng, 1, 12));
    for (auto s : p.supply) p.total += s;
    std::vector<std::int64_t> cuts = {0, p.total};
    for (int j = 0; j + 1 < m; ++j) cuts.push_back(testing::RandInt(rng, 0, static_cast<int>(p.total)));
    std::sort(cuts.begin(), cuts.end());
    for (int j = 0; j < m; ++j) p.demand.push_back(cuts[j + 1] - cuts[j]);
    for (auto s : p.supply) p.problem.source_mass.push_back(static_cast<double>(s) / p.total);
    for (auto d : p.demand) p.problem.sink_mass.push_back(static_cast<double>(d) / p.total);
    for (int c = 0; c < n * m; ++c) p.problem.cost.push_back(pool[testing::RandInt(rng, 0, 3)]);
    // Keys are distinct within a side and may coincide across sides.
    std::vector<std::uint64_t> keys(8);
    std::iota(keys.begin(), keys.end(), 0);
    std::shuffle(keys.begin(), keys.end(), rng);
    p.source_keys.assign(keys.begin(), keys.begin() + n);
    std::shuffle(keys.begin(), keys.end(), rng);
    p.sink_keys.assign(keys.begin(), keys.begin() + m);
    set.push_back(std::move(p));
  }
  return set;
}

Outcome EmdOracle() {
  const auto start = Clock::now();
  const auto set = TransportSet(1000);
  int failures = 0;
  double worst = 0.0;
  for (const auto& p : set) {
    const double exact = SolveTransportExact(p.problem).total_cost;
    const double oracle =
        testing::MinCostFlowOracle(p.supply, p.demand, p.problem.cost) / static_cast<double>(p.total);
    worst = std::max(worst, std::abs(exact - oracle));
    failures += std::abs(exact - oracle) > 1e-9;
  }
  const double secs = Seconds(start);
  Outcome o;
  o.status = failures == 0 && secs < 60.0 ? Outcome::kPass : Outcome::kFail;
  o.detail = Fmt("%zu problems (<= 6x6), mismatches=%d, max |exact - oracle|=%.2e, %.2fs",
                 set.size(), failures, worst, secs);
  return o;
}

TransportProblem Transposed(const TransportProblem& p) {
  TransportProblem t;
  t.source_mass = p.sink_mass;
  t.sink_mass = p.source_mass;
  for (std::size_t j = 0; j < p.num_sinks(); ++j) {
    for (std::size_t i = 0; i < p.num_sources(); ++i) t.cost.push_back(p.Cost(i, j));
  }
  return t;
}

Outcome GreedyDominance() {
  const auto set = TransportSet(1000);
  int below = 0, asym = 0;
  for (const auto& p : set) {
    const double exact = SolveTransportExact(p.problem).total_cost;
    const double g = GreedyTransport(p.problem, p.source_keys, p.sink_keys);
    below += g < exact - 1e-9;
    asym += g != GreedyTransport(Transposed(p.problem), p.sink_keys, p.source_keys);
  }
  // Same check on the distance itself.
  std::mt19937_64 rng(303);
  const DistanceEvaluator exact(kUnit, Mode::kExact), greedy(kUnit, Mode::kGreedy);
  const int kPairs = 1000;
  for (int r = 0; r < kPairs; ++r) {
    const auto a = testing::RandomInstance(rng, 8, 6), b = testing::RandomInstance(rng, 8, 6);
    const double g = greedy.Instance(a, b);
    below += g < exact.Instance(a, b) - 1e-9;
    asym += g != greedy.Instance(b, a);
    const auto& ta = a.templates().front().constraint;
    const auto& tb = b.templates().back().constraint;
    below += greedy.Constraint(ta, tb) < exact.Constraint(ta, tb) - 1e-9;
    asym += greedy.Constraint(ta, tb) != greedy.Constraint(tb, ta);
  }
  Outcome o;
  o.status = below == 0 && asym == 0 ? Outcome::kPass : Outcome::kFail;
  o.detail = Fmt("%zu transport problems + %d instance pairs, greedy < exact: %d, "
                 "asymmetric: %d",
                 set.size(), kPairs, below, asym);
  return o;
}

// ---------------------------------------------------------------------------

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome Fixture(const fs::path& data) {
  const RawInstance raw = ReadMpsFile(data / "fixture.mps");
  const NormalizedInstance inst = Normalize(Canonicalize(raw));
  const std::string table = RenderTemplateTable(inst);
  const bool same = table == Slurp(data / "fixture_table.txt");
  std::set<RhsClass> rhs;
  for (const auto& t : inst.templates()) rhs.insert(t.constraint.rhs());
  const bool has_equality = std::any_of(raw.rows.begin(), raw.rows.end(),
                                        [](const MpsRow& r) { return r.sense == RowSense::kEqual; });
  Outcome o;
  o.status = same && inst.templates().size() >= 4 && rhs.size() >= 2 && has_equality
                 ? Outcome::kPass
                 : Outcome::kFail;
  o.detail = Fmt("table %s, %zu templates, %zu rhs classes, equality row: %s",
                 same ? "identical" : "DIFFERS", inst.templates().size(), rhs.size(),
                 has_equality ? "yes" : "no");
  return o;
}

std::optional<fs::path> FindApp12(const fs::path& data) {
  if (const char* env = std::getenv("MILPDIST_APP1_2"); env != nullptr && *env != '\0') {
    return fs::path(env);
  }
  for (const char* name : {"app1-2.mps.gz", "app1-2.mps"}) {
    if (fs::exists(data / name)) return data / name;
  }
  return std::nullopt;
}

Outcome App12(const fs::path& data) {
  const auto path = FindApp12(data);
  Outcome o;
  if (!path) {
    o.status = Outcome::kSkip;
    o.detail = "app1-2 not found (set MILPDIST_APP1_2 or place app1-2.mps[.gz] in tests/data)";
    return o;
  }
  const NormalizedInstance inst = Normalize(Canonicalize(ReadMpsFile(*path)));
  std::vector<std::string> shares;
  for (const auto& t : inst.templates()) shares.push_back(FormatTemplateShare(t.proportion));
  std::sort(shares.begin(), shares.end());
  std::vector<std::string> expected = {"2.0e-1", "2.0e-1", "2.0e-1", "1.9e-1", "1.9e-1",
                                       "4.5e-3", "4.5e-3", "4.0e-3", "2.1e-3", "2.1e-3",
                                       "2.1e-3", "1.5e-5", "1.5e-5"};
  std::sort(expected.begin(), expected.end());
  const std::string objective = FormatTemplate(inst.objective());
  const bool ok = inst.templates().size() == 13 && objective == "1.0 × −1·B" && shares == expected;
  o.status = ok ? Outcome::kPass : Outcome::kFail;
  o.detail = Fmt("%zu templates (want 13), objective \"%s\", shares %s", inst.templates().size(),
                 objective.c_str(), shares == expected ? "match" : "differ");
  return o;
}

// ---------------------------------------------------------------------------

Outcome ZeroInflation() {
  std::mt19937_64 rng(505);
  const Family families[] = {Family::kBinPacking, Family::kKnapsack, Family::kSetCover};
  int nonzero = 0, checks = 0;
  for (int i = 0; i < 50; ++i) {
    const Family f = families[i % 3];
    const SizeParams size{testing::RandInt(rng, 8, 30), testing::RandInt(rng, 2, 8)};
    const CanonicalInstance base = GenerateSynthetic(f, size, rng());
    const NormalizedInstance a = Normalize(base);
    for (int k : {2, 5}) {
      for (int j : {2, 3}) {
        const NormalizedInstance b = Normalize(testing::InflateInstance(base, k, j));
        for (Mode mode : {Mode::kExact, Mode::kGreedy}) {
          nonzero += InstanceDistance(a, b, kUnit, mode) != 0.0;
          nonzero += InstanceDistance(b, a, kUnit, mode) != 0.0;
          checks += 2;
        }
      }
    }
  }
  Outcome o;
  o.status = nonzero == 0 ? Outcome::kPass : Outcome::kFail;
  o.detail = Fmt("50 instances x k{2,5} x j{2,3} x 2 modes: %d of %d distances nonzero",
                 nonzero, checks);
  return o;
}

// ---------------------------------------------------------------------------

Outcome ClassIdentification() {
  const auto start = Clock::now();
  const std::vector<Family> families = {Family::kBinPacking, Family::kKnapsack, Family::kSetCover};
  const auto generated = GenerateCorpus(families, 50, 10, 606);
  std::vector<LabeledInstance> corpus;
  std::map<std::string, std::pair<std::size_t, std::size_t>> sizes;
  std::map<std::string, std::pair<int, int>> split;
  for (std::size_t i = 0; i < generated.size(); ++i) {
    const auto& g = generated[i];
    const std::string label(ToString(g.family));
    auto& [lo, hi] = sizes.try_emplace(label, SIZE_MAX, 0).first->second;
    lo = std::min(lo, g.instance.variables.size());
    hi = std::max(hi, g.instance.variables.size());
    (g.is_test ? split[label].first : split[label].second)++;
    corpus.push_back({label + "_" + std::to_string(i), label,
                      g.is_test ? Split::kTest : Split::kReference, Normalize(g.instance)});
  }
  bool protocol = true;
  double min_spread = 1e9;
  for (const auto& [label, s] : split) protocol &= s.first == 10 && s.second == 40;
  for (const auto& [label, r] : sizes) {
    min_spread = std::min(min_spread, static_cast<double>(r.second) / r.first);
  }
  protocol &= min_spread >= 4.0;

  const ModeComparison cmp = CompareModes(corpus, 40, kUnit);
  const double secs = Seconds(start);
  Outcome o;
  const bool ok = protocol && cmp.exact.mean_accuracy >= 0.90 &&
                  cmp.greedy.mean_accuracy >= 0.90 && cmp.mean_overlap >= 0.90 && secs < 300.0;
  o.status = ok ? Outcome::kPass : Outcome::kFail;
  o.detail = Fmt("top-40 mean accuracy exact=%.3f greedy=%.3f, overlap=%.3f, "
                 "size spread >= %.1fx, %.1fs",
                 cmp.exact.mean_accuracy, cmp.greedy.mean_accuracy, cmp.mean_overlap,
                 min_spread, secs);
  return o;
}

// ---------------------------------------------------------------------------

Outcome Speedup() {
  std::mt19937_64 rng(707);
  std::vector<NormalizedInstance> pool;
  std::size_t min_templates = SIZE_MAX;
  while (pool.size() < 16) {
    NormalizedInstance inst = Normalize(testing::RandomCanonical(rng, 160, 30, 8));
    if (inst.templates().size() < 100) continue;
    min_templates = std::min(min_templates, inst.templates().size());
    pool.push_back(std::move(inst));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < pool.size() && pairs.size() < 100; ++i) {
    for (std::size_t j = i + 1; j < pool.size() && pairs.size() < 100; ++j) pairs.emplace_back(i, j);
  }
  auto time_mode = [&](Mode mode, std::vector<double>* per_pair) {
    const DistanceEvaluator ev(kUnit, mode);
    double sink = 0.0;
    for (const auto& [i, j] : pairs) {
      const auto t0 = Clock::now();
      sink += ev.Instance(pool[i], pool[j]);
      per_pair->push_back(Seconds(t0));
    }
    return sink;
  };
  std::vector<double> exact_t, greedy_t;
  time_mode(Mode::kGreedy, &greedy_t);
  time_mode(Mode::kExact, &exact_t);
  auto mean = [](const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
  };
  auto stdev = [&](const std::vector<double>& v) {
    const double m = mean(v);
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    return std::sqrt(acc / v.size());
  };
  const double ratio = mean(exact_t) / mean(greedy_t);
  Outcome o;
  o.status = ratio >= 10.0 && stdev(exact_t) > stdev(greedy_t) && pairs.size() >= 100
                 ? Outcome::kPass
                 : Outcome::kFail;
  o.detail = Fmt("%zu pairs, >= %zu templates each: exact %.2e s/pair (std %.2e), "
                 "greedy %.2e s/pair (std %.2e), speedup %.1fx",
                 pairs.size(), min_templates, mean(exact_t), stdev(exact_t), mean(greedy_t),
                 stdev(greedy_t), ratio);
  return o;
}

// ---------------------------------------------------------------------------

Outcome Ablation() {
  std::mt19937_64 rng(808);
  int exact_increases = 0, greedy_increases = 0;
  const int kPairs = 200;
  for (int r = 0; r < kPairs; ++r) {
    const auto a = testing::RandomInstance(rng, 8, 6), b = testing::RandomInstance(rng, 8, 6);
    for (Mode mode : {Mode::kExact, Mode::kGreedy}) {
      const double full = InstanceDistance(a, b, kUnit, mode);
      for (int k = 0; k < 4; ++k) {
        DistanceParams p = kUnit;
        double* field[] = {&p.alpha, &p.beta, &p.gamma, &p.zeta};
        *field[k] = 0.0;
        if (InstanceDistance(a, b, p, mode) > full + 1e-9) {
          (mode == Mode::kExact ? exact_increases : greedy_increases)++;
        }
      }
    }
  }
  Outcome o;
  o.status = exact_increases == 0 ? Outcome::kPass : Outcome::kFail;
  o.detail = Fmt("%d pairs x 4 params: exact increases=%d (greedy heuristic, informational: %d)",
                 kPairs, exact_increases, greedy_increases);
  return o;
}

}  // namespace
}  // namespace milpdist

int main(int argc, char** argv) {
  using namespace milpdist;
  const fs::path data = argc > 1 ? fs::path(argv[1]) : fs::path(MILPDIST_TEST_DATA_DIR);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"metric-axioms", MetricAxioms},
      {"emd-oracle", EmdOracle},
      {"greedy-dominance-symmetry", GreedyDominance},
      {"normalization-fixture", [&] { return Fixture(data); }},
      {"normalization-app1-2", [&] { return App12(data); }},
      {"zero-distance-inflation", ZeroInflation},
      {"class-identification", ClassIdentification},
      {"speedup-direction", Speedup},
      {"ablation-monotonicity", Ablation},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {Outcome::kFail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.status == Outcome::kPass ? "PASS" : o.status == Outcome::kFail ? "FAIL" : "SKIP";
    failed += o.status == Outcome::kFail;
    std::printf("%s %s: %s\n", tag, name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
