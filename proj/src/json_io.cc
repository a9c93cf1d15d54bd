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

#include "milpdist/json_io.h"

#include <fstream>

#include "milpdist/error.h"

namespace milpdist {
namespace {

using nlohmann::json;

json TemplateToJson(const ConstraintTemplate& t) {
  json pairs = json::array();
  for (const auto& e : t.entries()) {
    pairs.push_back({{"weight", ToString(e.key.weight)},
                     {"var", ToString(e.key.var)},
                     {"share", e.proportion.ToString()}});
  }
  return {{"pairs", std::move(pairs)}, {"rhs", ToString(t.rhs())}};
}

ConstraintTemplate TemplateFromJson(const json& doc) {
  std::vector<ConstraintTemplate::Entry> entries;
  for (const json& p : doc.at("pairs")) {
    entries.push_back(
        {PairKey{ParseWeightClass(p.at("weight").get<std::string>()),
                 ParseVarClass(p.at("var").get<std::string>())},
         Proportion::Parse(p.at("share").get<std::string>())});
  }
  return ConstraintTemplate::FromEntries(
      std::move(entries), ParseRhsClass(doc.at("rhs").get<std::string>()));
}

}  // namespace

json ToJson(const NormalizedInstance& instance) {
  json templates = json::array();
  for (const auto& wt : instance.templates()) {
    json t = TemplateToJson(wt.constraint);
    t["share"] = wt.proportion.ToString();
    templates.push_back(std::move(t));
  }
  return {{"format", kNormalizedFormatTag},
          {"name", instance.meta().name},
          {"num_constraints", instance.meta().num_constraints},
          {"num_variables", instance.meta().num_variables},
          {"objective", TemplateToJson(instance.objective())},
          {"templates", std::move(templates)}};
}

NormalizedInstance NormalizedFromJson(const json& doc) {
  try {
    if (doc.value("format", "") != kNormalizedFormatTag) {
      throw Error(ErrorCode::kInvalidArgument,
                  "not a normalized instance document");
    }
    std::vector<WeightedTemplate> templates;
    for (const json& t : doc.at("templates")) {
      templates.push_back({TemplateFromJson(t),
                           Proportion::Parse(t.at("share").get<std::string>())});
    }
    InstanceMeta meta{doc.value("name", ""),
                      doc.value<std::uint64_t>("num_constraints", 0),
                      doc.value<std::uint64_t>("num_variables", 0)};
    return NormalizedInstance::Create(TemplateFromJson(doc.at("objective")),
                                      std::move(templates), std::move(meta));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("malformed normalized instance: ") + e.what());
  }
}

void SaveNormalized(const NormalizedInstance& instance,
                    const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << ToJson(instance).dump(2) << "\n";
}

NormalizedInstance LoadNormalized(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kMissingFile, "cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                path.string() + ": invalid JSON: " + e.what());
  }
  return NormalizedFromJson(doc);
}

}  // namespace milpdist
