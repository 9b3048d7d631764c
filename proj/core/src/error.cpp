// Copyright 2026 The pgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pgame/error.hpp"

namespace pgame {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kBadDimension: return "BadDimension";
    case ErrorCode::kMissingProfile: return "MissingProfile";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidDistribution: return "InvalidDistribution";
    case ErrorCode::kDegenerateArgmax: return "DegenerateArgmax";
    case ErrorCode::kAnchorNotOnCycle: return "AnchorNotOnCycle";
    case ErrorCode::kNotTwoPlayer: return "NotTwoPlayer";
    case ErrorCode::kSizeLimit: return "SizeLimit";
    case ErrorCode::kZeroProbabilityType: return "ZeroProbabilityType";
    case ErrorCode::kAmbiguousTypeProfile: return "AmbiguousTypeProfile";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

bool IsValidationError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadDimension:
    case ErrorCode::kMissingProfile:
    case ErrorCode::kDuplicateLabel:
    case ErrorCode::kIndexOutOfRange:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kInvalidDistribution:
    case ErrorCode::kParseError:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace pgame
