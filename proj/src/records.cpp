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

#include "qec/records.hpp"

#include <cmath>
#include <cstdio>

namespace qec {
namespace {

// Rounded to the printed precision; non-finite values become null.
nlohmann::ordered_json real(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::stod(format_real(x));
}

nlohmann::ordered_json witness(const std::optional<VertexTuple>& w) {
  if (!w) return nullptr;
  return *w;
}

std::string class_label(const ClassificationReport& r) {
  return r.class_index ? std::to_string(*r.class_index) : "above";
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

nlohmann::ordered_json qec_record(const Graph& g, const QecResult& r,
                                  const SpectrumSummary& s) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  j["graph6"] = write_graph6(g);
  j["qec"] = real(r.value);
  j["lambda1"] = real(s.lambda1);
  j["lambda2"] = real(s.lambda2);
  j["mu"] = real(r.multiplier);
  j["residual"] = real(r.residual);
  j["eigengap"] = real(r.eigengap);
  return j;
}

nlohmann::ordered_json pattern_record(const PatternReport& p) {
  nlohmann::ordered_json j;
  j["diamond_free"] = p.diamond_free;
  j["claw_free"] = p.claw_free;
  j["c4_free"] = p.c4_free;
  j["c5_free"] = p.c5_free;
  j["diamond_witness"] = witness(p.diamond_witness);
  j["claw_witness"] = witness(p.claw_witness);
  j["c4_witness"] = witness(p.c4_witness);
  j["c5_witness"] = witness(p.c5_witness);
  return j;
}

nlohmann::ordered_json report_record(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  if (r.error) {
    j["error"] = *r.error;
    return j;
  }
  j["qec"] = real(r.qec);
  j["lambda1"] = real(r.lambda1);
  j["lambda2"] = real(r.lambda2);
  j["class_index"] = r.class_index ? nlohmann::ordered_json(*r.class_index)
                                   : nlohmann::ordered_json("above");
  j["boundary"] = r.boundary;
  j["diameter"] = r.diameter;
  const auto pattern = pattern_record(r.pattern);
  for (const auto& [key, value] : pattern.items()) j[key] = value;
  return j;
}

nlohmann::ordered_json verification_record(const VerificationRecord& v) {
  nlohmann::ordered_json j;
  j["name"] = v.name;
  j["scan_n"] = v.scan_n;
  j["graphs_scanned"] = v.graphs_scanned;
  j["passed"] = v.passed;
  j["members"] = v.members;
  j["expected"] = v.expected;
  j["counterexamples"] = v.counterexamples;
  return j;
}

std::string report_csv_header() {
  return "graph6,n,qec,lambda1,lambda2,class_index,boundary,diameter,"
         "diamond_free,claw_free,c4_free,c5_free";
}

std::string report_csv_row(const ClassificationReport& r) {
  const auto flag = [](bool b) { return b ? "1" : "0"; };
  // graph6 bytes never include commas or quotes, so no CSV escaping is needed.
  std::string row = r.graph6 + "," + std::to_string(r.n) + ",";
  if (r.error) return row + ",,,error,,,,,,";
  row += format_real(r.qec) + "," + format_real(r.lambda1) + "," +
         format_real(r.lambda2) + "," + class_label(r) + "," + flag(r.boundary) +
         "," + std::to_string(r.diameter) + "," + flag(r.pattern.diamond_free) +
         "," + flag(r.pattern.claw_free) + "," + flag(r.pattern.c4_free) + "," +
         flag(r.pattern.c5_free);
  return row;
}

}  // namespace qec
