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

#include "qec/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "qec/enumerate.hpp"
#include "qec/error.hpp"
#include "qec/families.hpp"
#include "qec/parallel.hpp"

namespace qec {

std::vector<LadderEntry> ladder(int max_n, int shards) {
  if (max_n < 2) throw Error(ErrorCode::kInvalidParameter, "ladder needs max_n >= 2");
  std::vector<LadderEntry> out(static_cast<std::size_t>(max_n - 1));
  // Path sizes are interleaved across shards; cost grows like n^3.
  run_shards(shards, [&](int s) {
    for (int n = 2 + s; n <= max_n; n += std::max(shards, 1)) {
      out[static_cast<std::size_t>(n - 2)] = {n, qec(path(n)).value};
    }
  });
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!(out[k].value < kLadderLimit)) {
      throw Error(ErrorCode::kLadderMonotonicityViolation,
                  "QEC(P_" + std::to_string(out[k].n) + ") = " +
                      std::to_string(out[k].value) + " is not below -1/2",
                  std::nullopt, out[k].value);
    }
    if (k > 0 && !(out[k - 1].value < out[k].value)) {
      throw Error(ErrorCode::kLadderMonotonicityViolation,
                  "QEC(P_" + std::to_string(out[k - 1].n) + ") >= QEC(P_" +
                      std::to_string(out[k].n) + ")",
                  std::nullopt, out[k].value);
    }
  }
  return out;
}

LadderPosition locate(double value, std::span<const LadderEntry> ladder, double tol) {
  LadderPosition pos;
  if (value >= kLadderLimit - tol) {
    pos.boundary = std::abs(value - kLadderLimit) <= tol;
    return pos;
  }
  if (ladder.empty() || value < ladder.front().value - tol) {
    throw Error(ErrorCode::kInvalidParameter,
                "value " + std::to_string(value) + " lies below the ladder start",
                std::nullopt, value);
  }
  // Last entry with ladder[k] <= value + tol.
  const auto it = std::upper_bound(
      ladder.begin(), ladder.end(), value + tol,
      [](double v, const LadderEntry& e) { return v < e.value; });
  const auto idx = static_cast<std::size_t>(it - ladder.begin()) - 1;
  if (idx + 1 >= ladder.size()) {
    throw Error(ErrorCode::kLadderTooShort,
                "ladder ends at QEC(P_" + std::to_string(ladder.back().n) +
                    ") = " + std::to_string(ladder.back().value) +
                    ", below the value " + std::to_string(value),
                std::nullopt, value);
  }
  pos.class_index = ladder[idx].n;
  pos.boundary = std::abs(value - ladder[idx].value) <= tol;
  return pos;
}

ClassificationReport classify(const Graph& g, std::span<const LadderEntry> ladder,
                              double tol) {
  ClassificationReport r;
  r.graph6 = write_graph6(g);
  r.n = g.order();
  r.qec = qec(g).value;
  const auto spectrum = distance_spectrum(g);
  r.lambda1 = spectrum.lambda1;
  r.lambda2 = spectrum.lambda2;
  r.diameter = diameter(g);
  r.pattern = forbidden_screen(g);
  const auto pos = locate(r.qec, ladder, tol);
  r.class_index = pos.class_index;
  r.boundary = pos.boundary;
  return r;
}

std::vector<ClassificationReport> scan(std::span<const Graph> corpus,
                                       std::span<const LadderEntry> ladder, double tol,
                                       int shards) {
  std::vector<ClassificationReport> out(corpus.size());
  run_shards(shards, [&](int s) {
    const auto [begin, end] = shard_range(corpus.size(), s, shards);
    for (std::size_t i = begin; i < end; ++i) {
      try {
        out[i] = classify(corpus[i], ladder, tol);
      } catch (const Error& e) {
        out[i] = ClassificationReport{};
        out[i].graph6 = write_graph6(corpus[i]);
        out[i].n = corpus[i].order();
        out[i].error = e.what();
      }
    }
  });
  return out;
}

namespace {

using FormSet = std::map<CanonicalForm, std::string>;

FormSet forms_of(const std::vector<Graph>& graphs) {
  FormSet out;
  for (const auto& g : graphs) {
    const auto form = canonical_form(g);
    out.emplace(form, write_graph6(to_graph(form)));
  }
  return out;
}

// Compares the scanned members of one class with the predicted set.
void compare_members(VerificationRecord& rec, const FormSet& expected,
                     const std::map<CanonicalForm, std::size_t>& found,
                     std::span<const ClassificationReport> reports) {
  for (const auto& [form, index] : found) {
    if (!expected.contains(form)) {
      rec.counterexamples.push_back(reports[index].graph6 +
                                    ": in the class but not predicted");
    }
  }
  for (const auto& [form, g6] : expected) {
    if (!found.contains(form)) {
      rec.counterexamples.push_back(g6 + ": predicted member missing from the class");
    }
  }
}

VerificationRecord collect(std::string name, std::span<const ClassificationReport> reports,
                           int scan_n, int class_index,
                           std::map<CanonicalForm, std::size_t>& found) {
  VerificationRecord rec;
  rec.name = std::move(name);
  rec.scan_n = scan_n;
  rec.graphs_scanned = reports.size();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    if (r.error) {
      rec.counterexamples.push_back(r.graph6 + ": scan error: " + *r.error);
      continue;
    }
    if (r.class_index != class_index) continue;
    rec.members.push_back(r.graph6);
    const auto form = canonical_form(parse_graph6(r.graph6));
    if (!found.emplace(form, i).second) {
      rec.counterexamples.push_back(r.graph6 + ": isomorphic duplicate in corpus");
    }
  }
  return rec;
}

}  // namespace

VerificationRecord verify_class2(std::span<const ClassificationReport> reports,
                                 int scan_n, double tol) {
  if (scan_n < 2 || scan_n > kMaxCanonicalOrder) {
    throw Error(ErrorCode::kInvalidParameter, "class-2 verification needs 2 <= n <= 9");
  }
  std::map<CanonicalForm, std::size_t> found;
  auto rec = collect("class2", reports, scan_n, 2, found);
  std::vector<Graph> predicted;
  for (int k = 2; k <= scan_n; ++k) predicted.push_back(complete(k));
  const auto expected = forms_of(predicted);
  for (const auto& [form, g6] : expected) rec.expected.push_back(g6);
  compare_members(rec, expected, found, reports);
  for (const auto& [form, index] : found) {
    const auto& r = reports[index];
    if (std::abs(r.qec + 1.0) > tol) {
      rec.counterexamples.push_back(r.graph6 + ": strictly inside (QEC(P2), QEC(P3)), qec=" +
                                    std::to_string(r.qec));
    }
  }
  rec.passed = rec.counterexamples.empty();
  return rec;
}

VerificationRecord verify_class3(std::span<const ClassificationReport> reports,
                                 int scan_n, double tol) {
  if (scan_n < 3 || scan_n > kMaxCanonicalOrder) {
    throw Error(ErrorCode::kInvalidParameter, "class-3 verification needs 3 <= n <= 9");
  }
  std::map<CanonicalForm, std::size_t> found;
  auto rec = collect("class3", reports, scan_n, 3, found);

  std::map<CanonicalForm, double> formula;
  FormSet expected;
  const auto predict = [&](int a, int b) {
    const Graph g = star_product_complete(a, b);
    const auto form = canonical_form(g);
    expected.emplace(form, write_graph6(to_graph(form)));
    formula.emplace(form, qec_formula_star_kk(a, b));
  };
  for (int m = 2; m + 1 <= scan_n; ++m) predict(m, 2);
  if (scan_n >= 5) predict(3, 3);
  for (const auto& [form, g6] : expected) rec.expected.push_back(g6);
  compare_members(rec, expected, found, reports);

  const auto p3 = canonical_form(path(3));
  const double p3_value = -2.0 / 3.0;
  for (const auto& [form, index] : found) {
    const auto& r = reports[index];
    if (const auto it = formula.find(form);
        it != formula.end() && std::abs(r.qec - it->second) > tol) {
      rec.counterexamples.push_back(r.graph6 + ": qec " + std::to_string(r.qec) +
                                    " differs from the K_n star K_m formula");
    }
    const bool at_p3 = std::abs(r.qec - p3_value) <= tol;
    if (at_p3 != (form == p3)) {
      rec.counterexamples.push_back(
          r.graph6 + (at_p3 ? ": equals QEC(P3) but is not P3"
                            : ": P3 does not attain QEC(P3)"));
    }
  }
  rec.passed = rec.counterexamples.empty();
  return rec;
}

namespace {

std::vector<ClassificationReport> verification_scan(int scan_n, int shards) {
  if (scan_n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kTooLargeForEnumeration,
                "verification enumerates n <= 7; got " + std::to_string(scan_n));
  }
  const auto corpus = enumerate_connected_range(2, scan_n, shards);
  const auto steps = ladder(kVerificationLadder, shards);
  return scan(corpus, steps, kDefaultTolerance, shards);
}

}  // namespace

VerificationRecord verify_class2(int scan_n, int shards) {
  const auto reports = verification_scan(scan_n, shards);
  return verify_class2(reports, scan_n);
}

VerificationRecord verify_class3(int scan_n, int shards) {
  const auto reports = verification_scan(scan_n, shards);
  return verify_class3(reports, scan_n);
}

void require_passed(const VerificationRecord& record) {
  if (record.passed) return;
  std::string message = record.name + " failed:";
  for (const auto& c : record.counterexamples) message += " [" + c + "]";
  throw Error(ErrorCode::kTheoremViolation, message);
}

}  // namespace qec
