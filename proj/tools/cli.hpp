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

#ifndef QEC_TOOLS_CLI_HPP_
#define QEC_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace qec::cli {

// Stable process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kCertificationFailure = 2,
  kNotQEClass = 3,
  kVerificationFailure = 4,
  kScanErrors = 5,
};

// Runs the command line `args` (without the program name). Normal output goes
// to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qec::cli

#endif  // QEC_TOOLS_CLI_HPP_
