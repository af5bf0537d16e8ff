// Copyright 2026 The qec Authors
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

#include "qec/error.hpp"

namespace qec {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kDisconnectedSubgraph: return "DisconnectedSubgraph";
    case ErrorCode::kMalformedGraph6: return "MalformedGraph6";
    case ErrorCode::kMalformedEdgeList: return "MalformedEdgeList";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kTooSmall: return "TooSmall";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kNotQEClass: return "NotQEClass";
    case ErrorCode::kNonNegativeInput: return "NonNegativeInput";
    case ErrorCode::kNonNegativeQec: return "NonNegativeQec";
    case ErrorCode::kPatternTooLarge: return "PatternTooLarge";
    case ErrorCode::kTooLargeForCanonical: return "TooLargeForCanonical";
    case ErrorCode::kTooLargeForEnumeration: return "TooLargeForEnumeration";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kLadderMonotonicityViolation:
      return "LadderMonotonicityViolation";
    case ErrorCode::kLadderTooShort: return "LadderTooShort";
    case ErrorCode::kTheoremViolation: return "TheoremViolation";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> line, std::optional<double> value)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      message_(message),
      line_(line),
      value_(value) {}

}  // namespace qec
