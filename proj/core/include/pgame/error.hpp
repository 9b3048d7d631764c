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

#ifndef PGAME_ERROR_HPP
#define PGAME_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgame {

enum class ErrorCode {
  kDivisionByZero,
  kBadDimension,
  kMissingProfile,
  kDuplicateLabel,
  kIndexOutOfRange,
  kDimensionMismatch,
  kInvalidDistribution,
  kDegenerateArgmax,
  kAnchorNotOnCycle,
  kNotTwoPlayer,
  kSizeLimit,
  kZeroProbabilityType,
  kAmbiguousTypeProfile,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// True for the codes that describe a malformed game or Bayesian game, as
// opposed to an analysis that cannot proceed on a well-formed one.
bool IsValidationError(ErrorCode code);

// The single exception type thrown by the library. The message always names
// the offending index, label, or profile.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pgame

#endif  // PGAME_ERROR_HPP
