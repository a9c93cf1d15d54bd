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

#include "milpdist/error.h"

namespace milpdist {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptyFile: return "EmptyFile";
    case ErrorCode::kMalformedSection: return "MalformedSection";
    case ErrorCode::kDuplicateRow: return "DuplicateRow";
    case ErrorCode::kUnknownRowReference: return "UnknownRowReference";
    case ErrorCode::kUnknownColumnReference: return "UnknownColumnReference";
    case ErrorCode::kUnsupportedSection: return "UnsupportedSection";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kNoObjectiveRow: return "NoObjectiveRow";
    case ErrorCode::kInfeasibleBoundDeclaration:
      return "InfeasibleBoundDeclaration";
    case ErrorCode::kNonFiniteValue: return "NonFiniteValue";
    case ErrorCode::kEmptyInstance: return "EmptyInstance";
    case ErrorCode::kInfeasibleMarginals: return "InfeasibleMarginals";
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kBadSplitValue: return "BadSplitValue";
    case ErrorCode::kEmptyClass: return "EmptyClass";
    case ErrorCode::kDuplicatePath: return "DuplicatePath";
    case ErrorCode::kKTooLarge: return "KTooLarge";
    case ErrorCode::kBadSizeParams: return "BadSizeParams";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace milpdist
