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

#include "milpdist/eval.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "milpdist/error.h"
#include "milpdist/json_io.h"
#include "milpdist/normalize.h"
#include "milpdist/parallel.h"

namespace milpdist {
namespace {

std::string Trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(Trim(field));
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

void MeanStd(const std::vector<TestNeighbors>& tests, double* mean, double* std) {
  *mean = 0.0;
  *std = 0.0;
  if (tests.empty()) return;
  for (const auto& t : tests) *mean += t.seconds;
  *mean /= static_cast<double>(tests.size());
  for (const auto& t : tests) *std += (t.seconds - *mean) * (t.seconds - *mean);
  *std = std::sqrt(*std / static_cast<double>(tests.size()));
}

}  // namespace

DatasetManifest LoadManifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kMissingFile, "cannot open manifest " + path.string());
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kInvalidArgument, "manifest " + path.string() + " is empty");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> header = SplitCsv(line);
  const std::vector<std::string> expected = {"path", "class", "subclass", "split"};
  if (header != expected) {
    throw Error(ErrorCode::kInvalidArgument,
                "manifest header must be 'path,class,subclass,split'");
  }
  const std::filesystem::path base = path.parent_path();
  DatasetManifest manifest;
  std::set<std::filesystem::path> seen;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    const std::vector<std::string> f = SplitCsv(line);
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (f.size() != 4) {
      throw Error(ErrorCode::kInvalidArgument, where + ": expected 4 fields");
    }
    ManifestEntry entry;
    entry.path = f[0];
    if (entry.path.is_relative()) entry.path = base / entry.path;
    entry.path = entry.path.lexically_normal();
    entry.label = f[1];
    entry.subclass = f[2];
    if (f[3] == "test") {
      entry.split = Split::kTest;
    } else if (f[3] == "reference") {
      entry.split = Split::kReference;
    } else {
      throw Error(ErrorCode::kBadSplitValue,
                  where + ": split '" + f[3] + "' is not test|reference");
    }
    if (entry.label.empty()) {
      throw Error(ErrorCode::kInvalidArgument, where + ": empty class label");
    }
    if (!std::filesystem::exists(entry.path)) {
      throw Error(ErrorCode::kMissingFile, where + ": " + entry.path.string());
    }
    if (!seen.insert(entry.path).second) {
      throw Error(ErrorCode::kDuplicatePath, where + ": " + entry.path.string());
    }
    manifest.entries.push_back(std::move(entry));
  }
  std::map<std::string, std::size_t> references;
  for (const auto& e : manifest.entries) {
    references[e.label] += e.split == Split::kReference;
  }
  for (const auto& [label, count] : references) {
    if (count == 0) {
      throw Error(ErrorCode::kEmptyClass,
                  "class '" + label + "' has no reference instances");
    }
  }
  return manifest;
}

void WriteManifest(const DatasetManifest& manifest,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  const std::filesystem::path base = path.parent_path();
  out << "path,class,subclass,split\n";
  for (const auto& e : manifest.entries) {
    out << e.path.lexically_relative(base.empty() ? "." : base).generic_string()
        << "," << e.label << "," << e.subclass << ","
        << (e.split == Split::kTest ? "test" : "reference") << "\n";
  }
}

NormalizedInstance LoadInstance(const std::filesystem::path& path) {
  if (path.extension() == ".json") return LoadNormalized(path);
  return Normalize(Canonicalize(ReadMpsFile(path)));
}

std::vector<LabeledInstance> LoadCorpus(const DatasetManifest& manifest,
                                        bool by_subclass, std::size_t jobs) {
  std::vector<std::optional<NormalizedInstance>> loaded(manifest.entries.size());
  ParallelFor(loaded.size(), jobs, [&](std::size_t i) {
    loaded[i] = LoadInstance(manifest.entries[i].path);
  });
  std::vector<LabeledInstance> corpus;
  corpus.reserve(loaded.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    const ManifestEntry& e = manifest.entries[i];
    std::string label = e.label;
    if (by_subclass && !e.subclass.empty()) label += "/" + e.subclass;
    corpus.push_back({e.path.generic_string(), std::move(label), e.split,
                      std::move(*loaded[i])});
  }
  return corpus;
}

TopKReport EvaluateTopK(std::span<const LabeledInstance> corpus, std::size_t k,
                        const DistanceParams& params, Mode mode,
                        std::size_t jobs) {
  std::vector<std::size_t> tests, references;
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto& [n_test, n_ref] = counts[corpus[i].label];
    if (corpus[i].split == Split::kTest) {
      tests.push_back(i);
      ++n_test;
    } else {
      references.push_back(i);
      ++n_ref;
    }
  }
  for (const auto& [label, c] : counts) {
    if (c.first == 0 || c.second == 0) {
      throw Error(ErrorCode::kEmptyClass,
                  "class '" + label + "' needs test and reference instances");
    }
  }
  if (k == 0 || k > references.size()) {
    throw Error(ErrorCode::kKTooLarge,
                "k = " + std::to_string(k) + " but there are " +
                    std::to_string(references.size()) + " reference instances");
  }

  const DistanceEvaluator evaluator(params, mode);
  TopKReport report;
  report.mode = mode;
  report.k = k;
  report.tests.resize(tests.size());
  ParallelFor(tests.size(), jobs, [&](std::size_t t) {
    const LabeledInstance& test = corpus[tests[t]];
    std::vector<std::pair<double, std::size_t>> scored(references.size());
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t r = 0; r < references.size(); ++r) {
      scored[r] = {evaluator.Instance(test.instance, corpus[references[r]].instance), r};
    }
    const auto stop = std::chrono::steady_clock::now();
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(k),
                      scored.end());
    TestNeighbors& out = report.tests[t];
    out.corpus_index = tests[t];
    out.label = test.label;
    std::size_t own = 0;
    for (std::size_t n = 0; n < k; ++n) {
      const std::size_t index = references[scored[n].second];
      out.neighbors.push_back(index);
      own += corpus[index].label == test.label;
    }
    out.own_class_fraction = static_cast<double>(own) / static_cast<double>(k);
    out.seconds = std::chrono::duration<double>(stop - start).count();
  });

  std::map<std::string, std::pair<double, std::size_t>> sums;
  for (const auto& t : report.tests) {
    sums[t.label].first += t.own_class_fraction;
    ++sums[t.label].second;
  }
  for (const auto& [label, s] : sums) {
    report.class_accuracy[label] = s.first / static_cast<double>(s.second);
    report.mean_accuracy += report.class_accuracy[label];
  }
  report.mean_accuracy /= static_cast<double>(report.class_accuracy.size());
  MeanStd(report.tests, &report.mean_seconds, &report.std_seconds);
  return report;
}

double NeighborOverlap(std::span<const std::size_t> a,
                       std::span<const std::size_t> b) {
  if (a.empty()) return 1.0;
  std::vector<std::size_t> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::vector<std::size_t> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::back_inserter(common));
  return static_cast<double>(common.size()) / static_cast<double>(a.size());
}

ModeComparison CompareModes(std::span<const LabeledInstance> corpus,
                            std::size_t k, const DistanceParams& params,
                            std::size_t jobs) {
  ModeComparison cmp;
  cmp.exact = EvaluateTopK(corpus, k, params, Mode::kExact, jobs);
  cmp.greedy = EvaluateTopK(corpus, k, params, Mode::kGreedy, jobs);
  for (const auto& [label, acc] : cmp.exact.class_accuracy) {
    cmp.accuracy_delta[label] = cmp.greedy.class_accuracy.at(label) - acc;
  }
  double exact_total = 0.0, greedy_total = 0.0;
  for (std::size_t t = 0; t < cmp.exact.tests.size(); ++t) {
    cmp.overlap.push_back(NeighborOverlap(cmp.exact.tests[t].neighbors,
                                          cmp.greedy.tests[t].neighbors));
    cmp.mean_overlap += cmp.overlap.back();
    exact_total += cmp.exact.tests[t].seconds;
    greedy_total += cmp.greedy.tests[t].seconds;
  }
  if (!cmp.overlap.empty()) cmp.mean_overlap /= static_cast<double>(cmp.overlap.size());
  cmp.time_ratio = greedy_total > 0.0 ? exact_total / greedy_total : 0.0;
  return cmp;
}

nlohmann::json ToJson(const TopKReport& report,
                      std::span<const LabeledInstance> corpus,
                      bool with_timings) {
  nlohmann::json classes = nlohmann::json::object();
  for (const auto& [label, acc] : report.class_accuracy) classes[label] = acc;
  nlohmann::json tests = nlohmann::json::array();
  for (const auto& t : report.tests) {
    nlohmann::json neighbors = nlohmann::json::array();
    for (std::size_t n : t.neighbors) neighbors.push_back(corpus[n].id);
    nlohmann::json entry = {{"instance", corpus[t.corpus_index].id},
                            {"class", t.label},
                            {"own_class_fraction", t.own_class_fraction},
                            {"neighbors", std::move(neighbors)}};
    if (with_timings) entry["seconds"] = t.seconds;
    tests.push_back(std::move(entry));
  }
  nlohmann::json doc = {{"mode", ToString(report.mode)},
                        {"k", report.k},
                        {"class_accuracy", std::move(classes)},
                        {"mean_accuracy", report.mean_accuracy},
                        {"tests", std::move(tests)}};
  if (with_timings) {
    doc["timing"] = {{"mean_seconds", report.mean_seconds},
                     {"std_seconds", report.std_seconds}};
  }
  return doc;
}

nlohmann::json ToJson(const ModeComparison& cmp,
                      std::span<const LabeledInstance> corpus,
                      bool with_timings) {
  nlohmann::json delta = nlohmann::json::object();
  for (const auto& [label, d] : cmp.accuracy_delta) delta[label] = d;
  nlohmann::json doc = {{"exact", ToJson(cmp.exact, corpus, with_timings)},
                        {"greedy", ToJson(cmp.greedy, corpus, with_timings)},
                        {"accuracy_delta", std::move(delta)},
                        {"overlap", cmp.overlap},
                        {"mean_overlap", cmp.mean_overlap}};
  if (with_timings) doc["time_ratio_exact_over_greedy"] = cmp.time_ratio;
  return doc;
}

std::string RenderReportTable(const TopKReport& report, bool with_timings) {
  std::ostringstream out;
  out << "top-" << report.k << " accuracy (" << ToString(report.mode) << ")\n";
  std::size_t width = 5;
  for (const auto& [label, acc] : report.class_accuracy) width = std::max(width, label.size());
  for (const auto& [label, acc] : report.class_accuracy) {
    out << label << std::string(width - label.size() + 2, ' ') << Fixed(100.0 * acc, 1) << "\n";
  }
  out << "mean" << std::string(width - 2, ' ') << Fixed(100.0 * report.mean_accuracy, 1) << "\n";
  if (with_timings) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "time per test instance: %.3e s (std %.3e s)\n",
                  report.mean_seconds, report.std_seconds);
    out << buf;
  }
  return out.str();
}

std::string RenderComparisonTable(const ModeComparison& cmp, bool with_timings) {
  std::ostringstream out;
  std::size_t width = 5;
  for (const auto& [label, acc] : cmp.exact.class_accuracy) width = std::max(width, label.size());
  out << "class" << std::string(width - 3, ' ') << "exact  greedy  delta\n";
  for (const auto& [label, acc] : cmp.exact.class_accuracy) {
    out << label << std::string(width - label.size() + 2, ' ')
        << Fixed(100.0 * acc, 1) << "  " << Fixed(100.0 * cmp.greedy.class_accuracy.at(label), 1)
        << "  " << Fixed(100.0 * cmp.accuracy_delta.at(label), 1) << "\n";
  }
  out << "mean" << std::string(width - 2, ' ') << Fixed(100.0 * cmp.exact.mean_accuracy, 1)
      << "  " << Fixed(100.0 * cmp.greedy.mean_accuracy, 1) << "\n";
  out << "neighbor overlap: " << Fixed(cmp.mean_overlap, 4) << "\n";
  if (with_timings) out << "time ratio exact/greedy: " << Fixed(cmp.time_ratio, 2) << "\n";
  return out.str();
}

}  // namespace milpdist
