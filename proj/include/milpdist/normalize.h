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

#ifndef MILPDIST_NORMALIZE_H_
#define MILPDIST_NORMALIZE_H_

#include <string>

#include "milpdist/model.h"
#include "milpdist/mps.h"

namespace milpdist {

// Absolute tolerance for matching a coefficient to a singleton class.
inline constexpr double kClassTolerance = 1e-9;

// w must be finite and nonzero.
WeightClass ClassifyWeight(double w);
RhsClass ClassifyRhs(double b);

// Folds every constraint into its template, merges identical templates and
// weights them by multiplicity / m. Throws kEmptyInstance when m == 0.
NormalizedInstance Normalize(const CanonicalInstance& instance);

// Human-readable table: the objective line, then one row per template in
// descending proportion (ties by canonical key).
std::string RenderTemplateTable(const NormalizedInstance& instance);

// Mantissa/exponent rendering used by the table, e.g. 0.2 -> "2.0e-1".
std::string FormatTemplateShare(Proportion p);
// Pair share rounded to two decimals, e.g. 1/3 -> "0.33", 1/2 -> "0.5".
std::string FormatPairShare(Proportion p);
// "0.33 × ℝ·B + 0.67 × −1·C ≤ 0"; the objective omits the rhs part.
std::string FormatTemplate(const ConstraintTemplate& t);

}  // namespace milpdist

#endif  // MILPDIST_NORMALIZE_H_
