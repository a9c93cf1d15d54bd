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

#ifndef MILPDIST_EVAL_H_
#define MILPDIST_EVAL_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "milpdist/distance.h"
#include "milpdist/model.h"

namespace milpdist {

enum class Split { kTest, kReference };

struct ManifestEntry {
  std::filesystem::path path;
  std::string label;
  std::string subclass;  // may be empty
  Split split = Split::kReference;
};

struct DatasetManifest {
  std::vector<ManifestEntry> entries;
};

// CSV with header "path,class,subclass,split". Relative paths resolve
// against the manifest's directory. Errors: kMissingFile, kBadSplitValue,
// kDuplicatePath, kEmptyClass (a class without reference entries).
DatasetManifest LoadManifest(const std::filesystem::path& path);
void WriteManifest(const DatasetManifest& manifest,
                   const std::filesystem::path& path);

// Reads an instance from MPS (optionally gzipped) or from a normalized JSON
// cache (".json").
NormalizedInstance LoadInstance(const std::filesystem::path& path);

struct LabeledInstance {
  std::string id;
  std::string label;
  Split split = Split::kReference;
  NormalizedInstance instance;
};

// Loads and normalizes every manifest entry in parallel; labels are the
// subclass labels when `by_subclass` is set.
std::vector<LabeledInstance> LoadCorpus(const DatasetManifest& manifest,
                                        bool by_subclass = false,
                                        std::size_t jobs = 0);

struct TestNeighbors {
  std::size_t corpus_index = 0;       // index of the test instance
  std::string label;
  std::vector<std::size_t> neighbors;  // corpus indices, nearest first
  double own_class_fraction = 0.0;
  double seconds = 0.0;               // time to score all references
};

struct TopKReport {
  Mode mode = Mode::kGreedy;
  std::size_t k = 0;
  std::map<std::string, double> class_accuracy;
  double mean_accuracy = 0.0;  // mean over classes
  std::vector<TestNeighbors> tests;
  double mean_seconds = 0.0;
  double std_seconds = 0.0;
};

// For every test instance, scores all references, keeps the k nearest
// (ties by corpus order) and records the share from the test's own class.
// Errors: kKTooLarge (k == 0 or more than the reference count),
// kEmptyClass (a class without test or reference instances).
TopKReport EvaluateTopK(std::span<const LabeledInstance> corpus, std::size_t k,
                        const DistanceParams& params, Mode mode,
                        std::size_t jobs = 0);

struct ModeComparison {
  TopKReport exact;
  TopKReport greedy;
  std::map<std::string, double> accuracy_delta;  // greedy - exact
  std::vector<double> overlap;                   // per test instance
  double mean_overlap = 0.0;
  double time_ratio = 0.0;  // total exact time / total greedy time
};

// |A ∩ B| / k for two neighbor lists of length k.
double NeighborOverlap(std::span<const std::size_t> a,
                       std::span<const std::size_t> b);

ModeComparison CompareModes(std::span<const LabeledInstance> corpus,
                            std::size_t k, const DistanceParams& params,
                            std::size_t jobs = 0);

// Timing fields are emitted only when `with_timings` is set, so repeated
// runs produce identical documents by default.
nlohmann::json ToJson(const TopKReport& report,
                      std::span<const LabeledInstance> corpus,
                      bool with_timings);
nlohmann::json ToJson(const ModeComparison& comparison,
                      std::span<const LabeledInstance> corpus,
                      bool with_timings);
std::string RenderReportTable(const TopKReport& report, bool with_timings);
std::string RenderComparisonTable(const ModeComparison& comparison,
                                  bool with_timings);

}  // namespace milpdist

#endif  // MILPDIST_EVAL_H_
