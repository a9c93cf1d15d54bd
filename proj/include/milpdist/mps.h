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

#ifndef MILPDIST_MPS_H_
#define MILPDIST_MPS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "milpdist/model.h"

namespace milpdist {

enum class ObjectiveSense { kMinimize, kMaximize };
enum class RowSense { kLessEqual, kGreaterEqual, kEqual, kFree };
enum class BoundType { kUp, kLo, kFx, kFr, kMi, kPl, kBv, kLi, kUi };

struct MpsRow {
  std::string name;
  RowSense sense = RowSense::kFree;
};

struct MpsColumn {
  std::string name;
  bool integer = false;  // declared inside an INTORG/INTEND block
};

struct MpsCoefficient {
  int row = 0;
  int column = 0;
  double value = 0.0;
};

struct MpsBound {
  BoundType type = BoundType::kUp;
  int column = 0;
  double value = 0.0;
};

// A faithful transcription of an MPS document. Rows and columns are
// referenced by index into `rows` / `columns`.
struct RawInstance {
  std::string name;
  ObjectiveSense objective_sense = ObjectiveSense::kMinimize;
  std::vector<MpsRow> rows;
  std::vector<MpsColumn> columns;
  std::vector<MpsCoefficient> coefficients;  // file order
  std::map<int, double> rhs;                 // rows absent here have rhs 0
  std::map<int, double> ranges;
  std::vector<MpsBound> bounds;              // file order
  int objective_row = -1;                    // first N row, -1 if none
};

// Parses fixed or free MPS. Gzip input is detected by its magic bytes.
RawInstance ParseMps(std::string_view bytes);
RawInstance ReadMpsFile(const std::filesystem::path& path);

struct Term {
  std::uint32_t var = 0;
  double coef = 0.0;

  friend bool operator==(const Term&, const Term&) = default;
};

// sum(terms) <= rhs
struct LinearConstraint {
  std::vector<Term> terms;
  double rhs = 0.0;

  friend bool operator==(const LinearConstraint&,
                         const LinearConstraint&) = default;
};

// Minimization form with only "<=" rows and no zero coefficients.
struct CanonicalInstance {
  std::string name;
  std::vector<Term> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VarClass> variables;
  std::vector<std::string> variable_names;  // parallel to `variables`

  friend bool operator==(const CanonicalInstance&,
                         const CanonicalInstance&) = default;
};

// GE rows are negated, EQ and ranged rows split into two inequalities,
// maximization is negated, extra N rows and empty rows are dropped and
// BOUNDS entries only influence variable classes.
CanonicalInstance Canonicalize(const RawInstance& raw);

// Free-format MPS whose canonicalization reproduces `instance`.
std::string WriteMps(const CanonicalInstance& instance);

}  // namespace milpdist

#endif  // MILPDIST_MPS_H_
