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

// The path ladder QEC(P_2) < QEC(P_3) < ... -> -1/2 and the classification of
// graphs by the ladder interval their QE constant falls in.

#ifndef QEC_CLASSIFY_HPP_
#define QEC_CLASSIFY_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qec/engine.hpp"
#include "qec/graph.hpp"
#include "qec/patterns.hpp"

namespace qec {

inline constexpr double kLadderLimit = -0.5;

struct LadderEntry {
  int n = 0;
  double value = 0.0;
};

// QEC(P_k) for 2 <= k <= max_n. Throws kLadderMonotonicityViolation if the
// computed values fail to increase strictly or reach -1/2.
std::vector<LadderEntry> ladder(int max_n, int shards = 1);

// Where `value` sits on the ladder. class_index k means
// ladder[k] <= value < ladder[k + 1]; nullopt means value >= -1/2 (above the
// ladder). Values within `tol` of an endpoint snap to the interval starting
// at that endpoint and raise `boundary`.
struct LadderPosition {
  std::optional<int> class_index;
  bool boundary = false;
};

// Throws kLadderTooShort when the ladder does not reach past `value`.
LadderPosition locate(double value, std::span<const LadderEntry> ladder,
                      double tol = kDefaultTolerance);

struct ClassificationReport {
  std::string graph6;
  int n = 0;
  double qec = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  std::optional<int> class_index;  // nullopt: above the ladder
  bool boundary = false;
  PatternReport pattern;
  int diameter = 0;
  std::optional<std::string> error;  // set when this graph could not be processed
};

ClassificationReport classify(const Graph& g, std::span<const LadderEntry> ladder,
                              double tol = kDefaultTolerance);

// One report per input graph, in input order. Per-graph failures are carried
// in ClassificationReport::error and do not stop the scan.
std::vector<ClassificationReport> scan(std::span<const Graph> corpus,
                                       std::span<const LadderEntry> ladder,
                                       double tol = kDefaultTolerance, int shards = 1);

struct VerificationRecord {
  std::string name;
  int scan_n = 0;
  std::size_t graphs_scanned = 0;
  bool passed = false;
  std::vector<std::string> members;         // graph6, in scan order
  std::vector<std::string> expected;        // graph6 of the predicted members
  std::vector<std::string> counterexamples; // "graph6: reason"
};

// Class 2 = [QEC(P_2), QEC(P_3)) must be exactly {K_2, ..., K_scan_n}, all at -1.
VerificationRecord verify_class2(std::span<const ClassificationReport> reports,
                                 int scan_n, double tol = kDefaultTolerance);
// Class 3 = [QEC(P_3), QEC(P_4)) must be exactly
// {K_m star K_2 : 2 <= m < scan_n} plus K_3 star K_3 when scan_n >= 5, with
// QEC = QEC(P_3) only for P_3.
VerificationRecord verify_class3(std::span<const ClassificationReport> reports,
                                 int scan_n, double tol = kDefaultTolerance);

// Enumerate every connected graph on 2..scan_n vertices, scan, verify.
VerificationRecord verify_class2(int scan_n, int shards = 1);
VerificationRecord verify_class3(int scan_n, int shards = 1);

// Throws kTheoremViolation listing the counterexamples if !record.passed.
void require_passed(const VerificationRecord& record);

// Ladder length used by the verification scans; long enough for every graph
// on at most seven vertices.
inline constexpr int kVerificationLadder = 60;

}  // namespace qec

#endif  // QEC_CLASSIFY_HPP_
