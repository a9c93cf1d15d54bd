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

#ifndef MILPDIST_ERROR_H_
#define MILPDIST_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace milpdist {

enum class ErrorCode {
  kInvalidArgument,
  // MPS ingestion.
  kEmptyFile,
  kMalformedSection,
  kDuplicateRow,
  kUnknownRowReference,
  kUnknownColumnReference,
  kUnsupportedSection,
  kUnsupportedFormat,
  kNoObjectiveRow,
  kInfeasibleBoundDeclaration,
  // Normalization.
  kNonFiniteValue,
  kEmptyInstance,
  // Transport.
  kInfeasibleMarginals,
  // Evaluation harness.
  kMissingFile,
  kBadSplitValue,
  kEmptyClass,
  kDuplicatePath,
  kKTooLarge,
  kBadSizeParams,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type. The code
// lets callers (the CLI in particular) distinguish data errors without
// parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace milpdist

#endif  // MILPDIST_ERROR_H_
