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

#include "cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "milpdist/distance.h"
#include "milpdist/error.h"
#include "milpdist/eval.h"
#include "milpdist/json_io.h"
#include "milpdist/mps.h"
#include "milpdist/normalize.h"
#include "milpdist/synthetic.h"

namespace milpdist {
namespace {

namespace fs = std::filesystem;

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

std::string Decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

void Emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kIoError, "cannot write " + out_path);
  file << text;
}

// Paths listed in a dataset manifest (first column "path") or one per line.
std::vector<fs::path> ReadPathList(const fs::path& list) {
  std::ifstream in(list);
  if (!in) throw Error(ErrorCode::kMissingFile, "cannot open " + list.string());
  std::vector<fs::path> paths;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string field = line.substr(0, line.find(','));
    const bool header = first && field == "path";
    first = false;
    if (header || field.find_first_not_of(" \t") == std::string::npos) continue;
    fs::path p = field;
    if (p.is_relative()) p = list.parent_path() / p;
    if (!fs::exists(p)) throw Error(ErrorCode::kMissingFile, p.string());
    paths.push_back(p.lexically_normal());
  }
  return paths;
}

struct Options {
  DistanceParams params;
  std::string mode = "greedy";
  std::size_t k = 40;
  std::uint64_t seed = 1;
  std::size_t jobs = 0;
  std::string out;
  std::string format;
};

void AddParamFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--alpha", o.params.alpha, "weight-class mismatch cost")->capture_default_str();
  cmd->add_option("--beta", o.params.beta, "variable-class mismatch cost")->capture_default_str();
  cmd->add_option("--gamma", o.params.gamma, "rhs-class mismatch cost")->capture_default_str();
  cmd->add_option("--zeta", o.params.zeta, "objective term weight")->capture_default_str();
  cmd->add_option("--mode", o.mode, "exact or greedy")
      ->check(CLI::IsMember({"exact", "greedy"}))
      ->capture_default_str();
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structural distances between MILP instances"};
  app.name("milpdist");
  app.require_subcommand(1);
  Options o;

  auto* normalize = app.add_subcommand("normalize", "print the template table of an MPS file");
  std::string normalize_input;
  std::string json_out;
  normalize->add_option("file", normalize_input, "MPS file (optionally gzipped)")->required();
  normalize->add_option("--format", o.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  normalize->add_option("--out", o.out, "write the output here instead of stdout");
  normalize->add_option("--json", json_out, "also write the normalized instance as JSON");

  auto* dist = app.add_subcommand("dist", "distance between two instances");
  std::string dist_a, dist_b;
  dist->add_option("a", dist_a, "first instance (MPS or normalized JSON)")->required();
  dist->add_option("b", dist_b, "second instance (MPS or normalized JSON)")->required();
  AddParamFlags(dist, o);

  auto* distmat = app.add_subcommand("distmat", "all-pairs distance matrix");
  std::string list_path;
  distmat->add_option("manifest", list_path, "dataset manifest or list of paths")->required();
  AddParamFlags(distmat, o);
  distmat->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  distmat->add_option("--out", o.out, "output path");
  distmat->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");

  auto* eval = app.add_subcommand("eval", "top-k class identification accuracy");
  std::string manifest_path;
  bool compare = false, by_subclass = false, timings = false;
  eval->add_option("manifest", manifest_path, "dataset manifest CSV")->required();
  AddParamFlags(eval, o);
  eval->add_option("--k", o.k, "neighbors per test instance")->capture_default_str();
  eval->add_flag("--compare", compare, "run both modes and compare them");
  eval->add_flag("--by-subclass", by_subclass, "use class/subclass labels");
  eval->add_flag("--timings", timings, "include wall-clock timings");
  eval->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  eval->add_option("--out", o.out, "output path");
  eval->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");

  auto* gen = app.add_subcommand("gen", "generate synthetic instances");
  std::string family = "knapsack", corpus_dir;
  SizeParams size;
  int per_family = 50, tests_per_family = 10;
  gen->add_option("--family", family, "binpacking, knapsack or setcover")
      ->check(CLI::IsMember({"binpacking", "knapsack", "setcover"}))
      ->capture_default_str();
  gen->add_option("--items", size.items, "items or elements")->capture_default_str();
  gen->add_option("--bins", size.bins, "bins or sets")->capture_default_str();
  gen->add_option("--seed", o.seed, "random seed")->capture_default_str();
  gen->add_option("--out", o.out, "MPS output path (stdout if omitted)");
  gen->add_option("--corpus", corpus_dir,
                  "write a three-family corpus and manifest.csv into this directory");
  gen->add_option("--per-family", per_family, "instances per family (corpus)")->capture_default_str();
  gen->add_option("--tests", tests_per_family, "test instances per family (corpus)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    o.params.Validate();
  } catch (const Error& e) {
    err << "milpdist: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    const Mode mode = ParseMode(o.mode);
    if (*normalize) {
      const NormalizedInstance inst = LoadInstance(normalize_input);
      if (!json_out.empty()) SaveNormalized(inst, json_out);
      Emit(o.format == "json" ? ToJson(inst).dump(2) + "\n" : RenderTemplateTable(inst),
           o.out, out);
    } else if (*dist) {
      const double d = InstanceDistance(LoadInstance(dist_a), LoadInstance(dist_b), o.params, mode);
      out << Decimal(d) << "\n";
    } else if (*distmat) {
      const std::vector<fs::path> paths = ReadPathList(list_path);
      std::vector<NormalizedInstance> instances;
      for (const auto& p : paths) instances.push_back(LoadInstance(p));
      const DistanceMatrix m = ComputeDistanceMatrix(instances, o.params, mode, o.jobs);
      std::string text;
      if (o.format == "json") {
        nlohmann::json names = nlohmann::json::array();
        for (const auto& p : paths) names.push_back(p.generic_string());
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < m.rows; ++i) {
          std::vector<double> row(m.values.begin() + static_cast<std::ptrdiff_t>(i * m.cols),
                                  m.values.begin() + static_cast<std::ptrdiff_t>((i + 1) * m.cols));
          rows.push_back(row);
        }
        text = nlohmann::json{{"mode", ToString(mode)}, {"instances", names}, {"matrix", rows}}
                   .dump(2) + "\n";
      } else {
        std::ostringstream csv;
        csv << "instance";
        for (const auto& p : paths) csv << "," << p.generic_string();
        csv << "\n";
        for (std::size_t i = 0; i < m.rows; ++i) {
          csv << paths[i].generic_string();
          for (std::size_t j = 0; j < m.cols; ++j) csv << "," << Decimal(m.at(i, j));
          csv << "\n";
        }
        text = csv.str();
      }
      Emit(text, o.out, out);
    } else if (*eval) {
      const DatasetManifest manifest = LoadManifest(manifest_path);
      const std::vector<LabeledInstance> corpus = LoadCorpus(manifest, by_subclass, o.jobs);
      std::string text;
      const bool table = o.format == "table";
      if (compare) {
        const ModeComparison cmp = CompareModes(corpus, o.k, o.params, o.jobs);
        text = table ? RenderComparisonTable(cmp, timings)
                     : ToJson(cmp, corpus, timings).dump(2) + "\n";
      } else {
        const TopKReport report = EvaluateTopK(corpus, o.k, o.params, mode, o.jobs);
        text = table ? RenderReportTable(report, timings)
                     : ToJson(report, corpus, timings).dump(2) + "\n";
      }
      Emit(text, o.out, out);
    } else if (*gen) {
      if (!corpus_dir.empty()) {
        const std::vector<Family> families = {Family::kBinPacking, Family::kKnapsack,
                                              Family::kSetCover};
        const auto corpus = GenerateCorpus(families, per_family, tests_per_family, o.seed);
        fs::create_directories(corpus_dir);
        DatasetManifest manifest;
        std::vector<int> index(3, 0);
        for (const auto& c : corpus) {
          const std::string label(ToString(c.family));
          const fs::path file = fs::path(corpus_dir) /
                                (label + "_" + std::to_string(index[static_cast<int>(c.family)]++) + ".mps");
          Emit(WriteMps(c.instance), file.string(), out);
          manifest.entries.push_back({file, label, "", c.is_test ? Split::kTest : Split::kReference});
        }
        WriteManifest(manifest, fs::path(corpus_dir) / "manifest.csv");
        err << "wrote " << corpus.size() << " instances and manifest.csv to " << corpus_dir << "\n";
      } else {
        Emit(WriteMps(GenerateSynthetic(ParseFamily(family), size, o.seed)), o.out, out);
      }
    }
  } catch (const Error& e) {
    err << "milpdist: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "milpdist: " << e.what() << "\n";
    return kDataError;
  }
  return 0;
}

}  // namespace milpdist
