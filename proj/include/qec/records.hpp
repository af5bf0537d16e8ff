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

// Flat serializations shared by the CLI and tests. Reals are printed with 12
// significant digits so output is byte-stable across platforms.

#ifndef QEC_RECORDS_HPP_
#define QEC_RECORDS_HPP_

#include <span>
#include <string>

#include "json.hpp"
#include "qec/classify.hpp"
#include "qec/engine.hpp"
#include "qec/graph.hpp"
#include "qec/patterns.hpp"

namespace qec {

std::string format_real(double x);

// {n, graph6, qec, lambda1, lambda2, mu, residual, eigengap}
nlohmann::ordered_json qec_record(const Graph& g, const QecResult& r,
                                  const SpectrumSummary& s);

nlohmann::ordered_json pattern_record(const PatternReport& p);
nlohmann::ordered_json report_record(const ClassificationReport& r);
nlohmann::ordered_json verification_record(const VerificationRecord& v);

std::string report_csv_header();
std::string report_csv_row(const ClassificationReport& r);

}  // namespace qec

#endif  // QEC_RECORDS_HPP_
