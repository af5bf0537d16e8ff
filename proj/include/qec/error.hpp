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

#ifndef QEC_ERROR_HPP_
#define QEC_ERROR_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qec {

enum class ErrorCode {
  kDisconnectedGraph,
  kDisconnectedSubgraph,
  kMalformedGraph6,
  kMalformedEdgeList,
  kTooLarge,
  kTooSmall,
  kInvalidParameter,
  kInvalidVertex,
  kNotQEClass,
  kNonNegativeInput,
  kNonNegativeQec,
  kPatternTooLarge,
  kTooLargeForCanonical,
  kTooLargeForEnumeration,
  kIoError,
  kLadderMonotonicityViolation,
  kLadderTooShort,
  kTheoremViolation,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception type. `line` is set
// for file-ingestion errors, `value` for numeric diagnostics (e.g. the negative
// eigenvalue that rules out an embedding).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt,
        std::optional<double> value = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<double> value() const noexcept { return value_; }
  // what() without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
  std::optional<std::size_t> line_;
  std::optional<double> value_;
};

}  // namespace qec

#endif  // QEC_ERROR_HPP_
