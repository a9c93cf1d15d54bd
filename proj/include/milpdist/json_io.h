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

#ifndef MILPDIST_JSON_IO_H_
#define MILPDIST_JSON_IO_H_

#include <filesystem>

#include "json.hpp"
#include "milpdist/model.h"

namespace milpdist {

// Cache format for normalized instances. Shares are exact rationals encoded
// as "num/den" strings; see README.md for the schema.
inline constexpr const char* kNormalizedFormatTag = "milpdist.normalized/1";

nlohmann::json ToJson(const NormalizedInstance& instance);
// Validates all invariants; throws kInvalidArgument on schema violations.
NormalizedInstance NormalizedFromJson(const nlohmann::json& doc);

void SaveNormalized(const NormalizedInstance& instance,
                    const std::filesystem::path& path);
NormalizedInstance LoadNormalized(const std::filesystem::path& path);

}  // namespace milpdist

#endif  // MILPDIST_JSON_IO_H_
