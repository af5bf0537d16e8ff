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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "qec/classify.hpp"
#include "qec/engine.hpp"
#include "qec/enumerate.hpp"
#include "qec/error.hpp"
#include "qec/families.hpp"
#include "qec/graph.hpp"
#include "qec/parallel.hpp"
#include "qec/patterns.hpp"
#include "qec/records.hpp"

namespace qec::cli {
namespace {

constexpr int kMaxLadder = 200;

enum class Format { kTable, kCsv, kJsonl };

struct Config {
  double tolerance = kDefaultTolerance;
  double certificate_tolerance = kDefaultCertificateTolerance;
  int shards = default_shards();
  Format format = Format::kTable;
  std::string format_name = "table";
  std::string output;
};

struct Input {
  std::string label;
  Graph graph;
};

const char* kHelpFooter = R"(Inputs:
  P:n  C:n  K:n  Kb:m,n  KsK:n,m  BK:n,m   named families
  SP:<g6>@<v>,<g6>@<v>                     star product of two graph6 graphs
  <graph6>                                 a graph6 literal
  <file>                                   edge list ("n m" then "u v" lines) or graph6 file

Exit codes: 0 ok, 1 input error, 2 certification failure, 3 not of QE class,
            4 theorem verification failed, 5 per-graph scan errors)";

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--tol", cfg.tolerance, "value comparison tolerance (0, 1e-3]")
      ->capture_default_str();
  sub->add_option("--cert-tol", cfg.certificate_tolerance,
                  "certificate and embedding tolerance (0, 1e-3]")
      ->capture_default_str();
  sub->add_option("--shards", cfg.shards, "worker threads (default: QEC_SHARDS or cores)");
  sub->add_option("--format", cfg.format_name, "table | csv | jsonl")
      ->transform(CLI::IsMember({"table", "csv", "jsonl"}, CLI::ignore_case).description(""))
      ->type_name("FORMAT");
  sub->add_option("--output", cfg.output, "write results to this file");
}

void validate(Config& cfg) {
  const auto in_range = [](double t) { return t > 0.0 && t <= 1e-3; };
  if (!in_range(cfg.tolerance) || !in_range(cfg.certificate_tolerance)) {
    throw Error(ErrorCode::kInvalidParameter, "tolerances must lie in (0, 1e-3]");
  }
  if (cfg.shards < 1) throw Error(ErrorCode::kInvalidParameter, "--shards must be >= 1");
  cfg.format = cfg.format_name == "csv"     ? Format::kCsv
               : cfg.format_name == "jsonl" ? Format::kJsonl
                                            : Format::kTable;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    static const std::regex header(R"(\s*\d+\s+\d+\s*\r?)");
    return std::regex_match(line, header);
  }
  return false;
}

std::vector<Input> read_file_inputs(const std::string& path) {
  const std::string text = slurp(path);
  std::vector<Input> out;
  if (looks_like_edge_list(text)) {
    out.push_back({path, parse_edge_list(text)});
    return out;
  }
  std::istringstream in(text);
  for (auto& g : read_graph6(in)) {
    std::string label = write_graph6(g);
    out.push_back({std::move(label), std::move(g)});
  }
  return out;
}

std::vector<Input> resolve(const std::vector<std::string>& specs,
                           const std::vector<std::string>& edge_files,
                           const std::vector<std::string>& graph6_files) {
  std::vector<Input> out;
  for (const auto& s : specs) {
    if (std::filesystem::is_regular_file(s)) {
      auto more = read_file_inputs(s);
      out.insert(out.end(), more.begin(), more.end());
    } else if (s.find(':') != std::string::npos) {
      out.push_back({s, build(parse_family_spec(s))});
    } else {
      out.push_back({s, parse_graph6(s)});
    }
  }
  for (const auto& f : edge_files) out.push_back({f, parse_edge_list(slurp(f))});
  for (const auto& f : graph6_files) {
    for (auto& g : ingest_graph6(f)) {
      std::string label = write_graph6(g);
      out.push_back({std::move(label), std::move(g)});
    }
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidParameter, "no input graph given");
  return out;
}

// Smallest ladder (doubling from 16 up to 200 rungs) that can place `value`.
LadderPosition place(double value, double tol, int shards) {
  for (int max_n = 16;; max_n = std::min(2 * max_n, kMaxLadder)) {
    try {
      return locate(value, ladder(max_n, shards), tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kLadderTooShort || max_n == kMaxLadder) throw;
    }
  }
}

std::vector<LadderEntry> ladder_for(std::span<const Graph> graphs, double tol, int shards) {
  int need = 16;
  for (const auto& g : graphs) {
    if (g.order() < 2 || !is_connected(g)) continue;
    const double v = qec(g).value;
    while (need < kMaxLadder) {
      try {
        locate(v, ladder(need, shards), tol);
        break;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kLadderTooShort) break;
        need = std::min(2 * need, kMaxLadder);
      }
    }
  }
  return ladder(need, shards);
}

std::string class_text(const LadderPosition& pos, double tol) {
  std::ostringstream s;
  if (!pos.class_index) {
    s << "above ladder (qec >= -1/2)";
    if (pos.boundary) s << ", boundary: equals -1/2 within " << format_real(tol);
    return s.str();
  }
  s << *pos.class_index << " (QEC(P_" << *pos.class_index << ") <= qec < QEC(P_"
    << *pos.class_index + 1 << "))";
  if (pos.boundary) {
    s << ", boundary: equals QEC(P_" << *pos.class_index << ") within "
      << format_real(tol);
  }
  return s.str();
}

std::string tuple_text(const std::optional<VertexTuple>& t) {
  if (!t) return "-";
  std::string s;
  for (Vertex v : *t) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_reals(std::span<const double> xs) {
  std::string s;
  for (double x : xs) s += (s.empty() ? "" : " ") + format_real(x);
  return s;
}

void print_pattern_table(std::ostream& out, const PatternReport& p) {
  out << "diamond_free  " << yes_no(p.diamond_free) << "  " << tuple_text(p.diamond_witness) << "\n"
      << "claw_free     " << yes_no(p.claw_free) << "  " << tuple_text(p.claw_witness) << "\n"
      << "c4_free       " << yes_no(p.c4_free) << "  " << tuple_text(p.c4_witness) << "\n"
      << "c5_free       " << yes_no(p.c5_free) << "  " << tuple_text(p.c5_witness) << "\n";
}

int cmd_compute(const std::vector<Input>& inputs, const Config& cfg, std::ostream& out,
                std::ostream& err) {
  int code = kOk;
  if (cfg.format == Format::kCsv) {
    out << "input,graph6,n,qec,lambda1,lambda2,mu,residual,eigengap,certified,"
           "class_index,boundary\n";
  }
  for (const auto& [label, g] : inputs) {
    const auto r = qec(g);
    const auto spectrum = distance_spectrum(g);
    const auto cert = certify(g, r, cfg.certificate_tolerance);
    const auto pattern = forbidden_screen(g);
    const auto pos = place(r.value, cfg.tolerance, cfg.shards);
    if (!cert.ok) {
      err << label << ": certification failed (residual " << format_real(cert.residual)
          << ", tol " << format_real(cfg.certificate_tolerance) << ")\n";
      code = kCertificationFailure;
    }
    switch (cfg.format) {
      case Format::kTable:
        out << "input         " << label << "\n"
            << "graph6        " << write_graph6(g) << "\n"
            << "n             " << g.order() << "\n"
            << "qec           " << format_real(r.value) << "\n"
            << "certified     " << yes_no(cert.ok) << " (residual "
            << format_real(cert.residual) << ", tol "
            << format_real(cfg.certificate_tolerance) << ")\n"
            << "mu            " << format_real(r.multiplier) << "\n"
            << "eigengap      " << format_real(r.eigengap) << "\n"
            << "maximizer     " << join_reals(r.maximizer) << "\n"
            << "lambda1       " << format_real(spectrum.lambda1) << "\n"
            << "lambda2       " << format_real(spectrum.lambda2) << "\n"
            << "qe_class      " << (r.value <= cfg.tolerance ? "QE" : "NotQE") << "\n"
            << "class         " << class_text(pos, cfg.tolerance) << "\n";
        print_pattern_table(out, pattern);
        out << "\n";
        break;
      case Format::kCsv:
        out << label << "," << write_graph6(g) << "," << g.order() << ","
            << format_real(r.value) << "," << format_real(spectrum.lambda1) << ","
            << format_real(spectrum.lambda2) << "," << format_real(r.multiplier) << ","
            << format_real(r.residual) << "," << format_real(r.eigengap) << ","
            << (cert.ok ? 1 : 0) << ","
            << (pos.class_index ? std::to_string(*pos.class_index) : "above") << ","
            << (pos.boundary ? 1 : 0) << "\n";
        break;
      case Format::kJsonl: {
        auto j = qec_record(g, r, spectrum);
        j["input"] = label;
        j["certified"] = cert.ok;
        nlohmann::ordered_json f = nlohmann::ordered_json::array();
        for (double x : r.maximizer) f.push_back(std::stod(format_real(x)));
        j["maximizer"] = f;
        j["class_index"] = pos.class_index ? nlohmann::ordered_json(*pos.class_index)
                                           : nlohmann::ordered_json("above");
        j["boundary"] = pos.boundary;
        j["pattern"] = pattern_record(pattern);
        out << j.dump() << "\n";
        break;
      }
    }
  }
  return code;
}

int cmd_spectrum(const std::vector<Input>& inputs, const Config& cfg, std::ostream& out) {
  if (cfg.format == Format::kCsv) out << "input,graph6,n,lambda1,lambda2,spectrum\n";
  for (const auto& [label, g] : inputs) {
    const auto s = distance_spectrum(g);
    switch (cfg.format) {
      case Format::kTable:
        out << "input     " << label << "\n"
            << "lambda1   " << format_real(s.lambda1) << "\n"
            << "lambda2   " << format_real(s.lambda2) << "\n"
            << "spectrum  " << join_reals(s.full) << "\n\n";
        break;
      case Format::kCsv:
        out << label << "," << write_graph6(g) << "," << g.order() << ","
            << format_real(s.lambda1) << "," << format_real(s.lambda2) << ","
            << join_reals(s.full) << "\n";
        break;
      case Format::kJsonl: {
        nlohmann::ordered_json j;
        j["input"] = label;
        j["graph6"] = write_graph6(g);
        j["n"] = g.order();
        j["lambda1"] = std::stod(format_real(s.lambda1));
        j["lambda2"] = std::stod(format_real(s.lambda2));
        nlohmann::ordered_json full = nlohmann::ordered_json::array();
        for (double x : s.full) full.push_back(std::stod(format_real(x)));
        j["spectrum"] = full;
        out << j.dump() << "\n";
        break;
      }
    }
  }
  return kOk;
}

void print_reports(std::span<const ClassificationReport> reports, const Config& cfg,
                   std::ostream& out) {
  if (cfg.format == Format::kCsv) out << report_csv_header() << "\n";
  if (cfg.format == Format::kTable) {
    out << std::left << std::setw(14) << "graph6" << std::setw(4) << "n" << std::setw(17)
        << "qec" << std::setw(7) << "class" << std::setw(9) << "boundary" << std::setw(5)
        << "diam" << "free(diamond,claw,C4,C5)\n";
  }
  for (const auto& r : reports) {
    switch (cfg.format) {
      case Format::kCsv: out << report_csv_row(r) << "\n"; break;
      case Format::kJsonl: out << report_record(r).dump() << "\n"; break;
      case Format::kTable:
        if (r.error) {
          out << std::setw(14) << r.graph6 << std::setw(4) << r.n << "error: " << *r.error
              << "\n";
          break;
        }
        out << std::setw(14) << r.graph6 << std::setw(4) << r.n << std::setw(17)
            << format_real(r.qec) << std::setw(7)
            << (r.class_index ? std::to_string(*r.class_index) : "above") << std::setw(9)
            << (r.boundary ? "yes" : "no") << std::setw(5) << r.diameter
            << (r.pattern.diamond_free ? 1 : 0) << (r.pattern.claw_free ? 1 : 0)
            << (r.pattern.c4_free ? 1 : 0) << (r.pattern.c5_free ? 1 : 0) << "\n";
        break;
    }
  }
}

int cmd_classify(const std::vector<Input>& inputs, const Config& cfg, std::ostream& out) {
  std::vector<Graph> graphs;
  for (const auto& in : inputs) graphs.push_back(in.graph);
  const auto steps = ladder_for(graphs, cfg.tolerance, cfg.shards);
  const auto reports = scan(graphs, steps, cfg.tolerance, cfg.shards);
  print_reports(reports, cfg, out);
  const bool failed = std::any_of(reports.begin(), reports.end(),
                                  [](const auto& r) { return r.error.has_value(); });
  return failed ? kInputError : kOk;
}

int cmd_embed(const std::vector<Input>& inputs, const Config& cfg, std::ostream& out,
              std::ostream& err) {
  int code = kOk;
  for (const auto& [label, g] : inputs) {
    Embedding e;
    try {
      e = embed(g, cfg.certificate_tolerance);
    } catch (const Error& ex) {
      if (ex.code() != ErrorCode::kNotQEClass) throw;
      err << label << ": not of QE class, centred Gram matrix eigenvalue "
          << format_real(ex.value().value_or(0.0)) << "\n";
      code = std::max(code, static_cast<int>(kNotQEClass));
      continue;
    }
    // Reproduce D before printing anything.
    const auto d = distance_matrix(g);
    double worst = 0.0;
    for (int i = 0; i < g.order(); ++i) {
      for (int j = 0; j < g.order(); ++j) {
        double sq = 0.0;
        for (int c = 0; c < e.dim; ++c) {
          const double diff = e.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] -
                              e.points[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
          sq += diff * diff;
        }
        worst = std::max(worst, std::abs(sq - d(i, j)));
      }
    }
    if (worst > cfg.certificate_tolerance) {
      err << label << ": embedding misses squared distances by " << format_real(worst) << "\n";
      code = std::max(code, static_cast<int>(kCertificationFailure));
      continue;
    }
    switch (cfg.format) {
      case Format::kTable:
        out << "input  " << label << "\n" << "dim    " << e.dim << "\n";
        for (std::size_t i = 0; i < e.points.size(); ++i) {
          out << (i + 1) << "  " << join_reals(e.points[i]) << "\n";
        }
        out << "\n";
        break;
      case Format::kCsv:
        out << "input,vertex";
        for (int c = 0; c < e.dim; ++c) out << ",x" << c + 1;
        out << "\n";
        for (std::size_t i = 0; i < e.points.size(); ++i) {
          out << label << "," << i + 1;
          for (double x : e.points[i]) out << "," << format_real(x);
          out << "\n";
        }
        break;
      case Format::kJsonl: {
        nlohmann::ordered_json j;
        j["input"] = label;
        j["dim"] = e.dim;
        j["max_error"] = std::stod(format_real(worst));
        nlohmann::ordered_json pts = nlohmann::ordered_json::array();
        for (const auto& p : e.points) {
          nlohmann::ordered_json row = nlohmann::ordered_json::array();
          for (double x : p) row.push_back(std::stod(format_real(x)));
          pts.push_back(row);
        }
        j["points"] = pts;
        out << j.dump() << "\n";
        break;
      }
    }
  }
  return code;
}

int cmd_family(const std::vector<std::string>& specs, const Config& cfg, std::ostream& out) {
  if (cfg.format == Format::kCsv) out << "spec,graph6,n,m\n";
  for (const auto& s : specs) {
    const auto spec = parse_family_spec(s);
    const Graph g = build(spec);
    switch (cfg.format) {
      case Format::kTable:
        out << "# " << to_string(spec) << "  graph6 " << write_graph6(g) << "\n"
            << write_edge_list(g);
        break;
      case Format::kCsv:
        out << to_string(spec) << "," << write_graph6(g) << "," << g.order() << ","
            << g.size() << "\n";
        break;
      case Format::kJsonl: {
        nlohmann::ordered_json j;
        j["spec"] = to_string(spec);
        j["graph6"] = write_graph6(g);
        j["n"] = g.order();
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
        j["edges"] = edges;
        out << j.dump() << "\n";
        break;
      }
    }
  }
  return kOk;
}

int cmd_ladder(int max_n, const Config& cfg, std::ostream& out) {
  if (max_n < 2 || max_n > kMaxLadder) {
    throw Error(ErrorCode::kInvalidParameter, "ladder needs 2 <= max_n <= 200");
  }
  const auto steps = ladder(max_n, cfg.shards);
  if (cfg.format == Format::kCsv) out << "n,value,gap_next,gap_to_limit\n";
  if (cfg.format == Format::kTable) {
    out << std::left << std::setw(5) << "n" << std::setw(18) << "QEC(P_n)" << std::setw(18)
        << "gap to next" << "gap to -1/2\n";
  }
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& e = steps[k];
    const bool has_next = k + 1 < steps.size();
    const double gap = has_next ? steps[k + 1].value - e.value : 0.0;
    const double to_limit = kLadderLimit - e.value;
    switch (cfg.format) {
      case Format::kTable:
        out << std::setw(5) << e.n << std::setw(18) << format_real(e.value) << std::setw(18)
            << (has_next ? format_real(gap) : "-") << format_real(to_limit) << "\n";
        break;
      case Format::kCsv:
        out << e.n << "," << format_real(e.value) << "," << (has_next ? format_real(gap) : "")
            << "," << format_real(to_limit) << "\n";
        break;
      case Format::kJsonl: {
        nlohmann::ordered_json j;
        j["n"] = e.n;
        j["value"] = std::stod(format_real(e.value));
        j["gap_next"] = has_next ? nlohmann::ordered_json(std::stod(format_real(gap)))
                             : nlohmann::ordered_json(nullptr);
        j["gap_to_limit"] = std::stod(format_real(to_limit));
        out << j.dump() << "\n";
        break;
      }
    }
  }
  return kOk;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int print_verifications(const std::vector<VerificationRecord>& records, bool jsonl,
                        std::ostream& out) {
  bool ok = true;
  for (const auto& v : records) {
    ok = ok && v.passed;
    if (jsonl) {
      out << verification_record(v).dump() << "\n";
      continue;
    }
    out << (v.passed ? "PASS " : "FAIL ") << v.name << " (n <= " << v.scan_n << ", "
        << v.graphs_scanned << " graphs scanned)\n  members:";
    for (const auto& m : v.members) out << " " << m;
    out << "\n  expected:";
    for (const auto& m : v.expected) out << " " << m;
    out << "\n";
    for (const auto& c : v.counterexamples) out << "  counterexample " << c << "\n";
  }
  return ok ? kOk : kVerificationFailure;
}

std::vector<VerificationRecord> run_verifications(const std::vector<std::string>& names,
                                                  std::span<const ClassificationReport> reports,
                                                  int scan_n, double tol) {
  std::vector<VerificationRecord> records;
  for (const auto& name : names) {
    if (name == "class2") {
      records.push_back(verify_class2(reports, scan_n, tol));
    } else if (name == "class3") {
      records.push_back(verify_class3(reports, scan_n, tol));
    } else {
      throw Error(ErrorCode::kInvalidParameter,
                  "unknown verification \"" + name + "\" (expected class2, class3)");
    }
  }
  return records;
}

// "N" or "A-B".
std::pair<int, int> parse_range(const std::string& text) {
  static const std::regex single(R"(\d+)");
  static const std::regex range(R"((\d+)-(\d+))");
  std::smatch m;
  if (std::regex_match(text, single)) {
    const int n = std::stoi(text);
    return {n, n};
  }
  if (std::regex_match(text, m, range)) return {std::stoi(m[1]), std::stoi(m[2])};
  throw Error(ErrorCode::kInvalidParameter, "--enumerate expects N or A-B, got " + text);
}

int cmd_scan(const std::string& enumerate, const std::string& graph6_file,
             const std::string& verify, const Config& cfg, std::ostream& out,
             std::ostream& err) {
  if (enumerate.empty() == graph6_file.empty()) {
    throw Error(ErrorCode::kInvalidParameter,
                "scan needs exactly one of --enumerate or --graph6-file");
  }
  const auto names = split_list(verify);
  std::vector<Graph> corpus;
  int scan_n = 0;
  if (!enumerate.empty()) {
    auto [lo, hi] = parse_range(enumerate);
    // Verification needs every order from 2 up.
    if (!names.empty()) lo = 2;
    corpus = enumerate_connected_range(lo, hi, cfg.shards);
    scan_n = hi;
  } else {
    corpus = ingest_graph6(graph6_file);
    for (const auto& g : corpus) scan_n = std::max(scan_n, g.order());
  }
  const auto steps = ladder_for(corpus, cfg.tolerance, cfg.shards);
  const auto reports = scan(corpus, steps, cfg.tolerance, cfg.shards);
  print_reports(reports, cfg, out);

  std::map<std::string, std::size_t> per_class;
  std::size_t errors = 0;
  for (const auto& r : reports) {
    if (r.error) {
      ++errors;
      continue;
    }
    ++per_class[r.class_index ? "class " + std::to_string(*r.class_index) : "above"];
  }
  std::ostream& summary = cfg.format == Format::kTable ? out : err;
  summary << "# " << reports.size() << " graphs";
  for (const auto& [k, v] : per_class) summary << ", " << k << ": " << v;
  summary << ", errors: " << errors << "\n";

  int code = errors > 0 ? kScanErrors : kOk;
  if (!names.empty()) {
    const auto records = run_verifications(names, reports, scan_n, cfg.tolerance);
    // CSV has no verification layout; those summaries go to the error stream.
    const int v = print_verifications(records, cfg.format == Format::kJsonl,
                                      cfg.format == Format::kCsv ? err : out);
    if (v != kOk) code = v;
  }
  return code;
}

int cmd_verify(const std::string& which, int scan_n, const Config& cfg, std::ostream& out) {
  if (scan_n < 2 || scan_n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kInvalidParameter, "verify needs 2 <= --n <= 7");
  }
  const auto names = split_list(which);
  const auto corpus = enumerate_connected_range(2, scan_n, cfg.shards);
  const auto steps = ladder(kVerificationLadder, cfg.shards);
  const auto reports = scan(corpus, steps, cfg.tolerance, cfg.shards);
  return print_verifications(run_verifications(names, reports, scan_n, cfg.tolerance),
                             cfg.format == Format::kJsonl, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic embedding constants of graphs", "qec"};
  app.footer(kHelpFooter);
  app.require_subcommand(1);
  Config cfg;

  std::vector<std::string> inputs;
  std::vector<std::string> edge_files;
  std::vector<std::string> graph6_files;
  const auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("inputs", inputs, "family spec, graph6 literal or file");
    sub->add_option("--edge-list", edge_files, "edge-list file");
    sub->add_option("--graph6-file", graph6_files, "graph6 file");
    add_common(sub, cfg);
  };

  auto* compute = app.add_subcommand("compute", "QE constant, certificate, spectrum, patterns");
  add_inputs(compute);
  auto* spectrum = app.add_subcommand("spectrum", "distance spectrum");
  add_inputs(spectrum);
  auto* classify_cmd = app.add_subcommand("classify", "ladder interval and pattern flags");
  add_inputs(classify_cmd);
  auto* embed_cmd = app.add_subcommand("embed", "quadratic embedding coordinates");
  add_inputs(embed_cmd);

  std::vector<std::string> family_specs;
  auto* family = app.add_subcommand("family", "build a named graph");
  family->add_option("specs", family_specs, "family specs")->required();
  add_common(family, cfg);

  int max_n = 0;
  auto* ladder_cmd = app.add_subcommand("ladder", "QEC(P_n) for 2 <= n <= max_n");
  ladder_cmd->add_option("max_n", max_n, "largest path order (<= 200)")->required();
  add_common(ladder_cmd, cfg);

  std::string enumerate;
  std::string scan_file;
  std::string scan_verify;
  auto* scan_cmd = app.add_subcommand("scan", "classify an enumerated or ingested corpus");
  scan_cmd->add_option("--enumerate", enumerate, "N or A-B: connected graphs of these orders");
  scan_cmd->add_option("--graph6-file", scan_file, "graph6 corpus");
  scan_cmd->add_option("--verify", scan_verify, "class2,class3");
  add_common(scan_cmd, cfg);

  std::string which;
  int verify_n = kMaxEnumerationOrder;
  auto* verify = app.add_subcommand("verify", "check the class-2 / class-3 theorems");
  verify->add_option("which", which, "class2,class3")->required();
  verify->add_option("--n", verify_n, "largest order scanned (<= 7)")->capture_default_str();
  add_common(verify, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  try {
    validate(cfg);
    if (!cfg.output.empty()) {
      file.open(cfg.output);
      if (!file) throw Error(ErrorCode::kIoError, "cannot write " + cfg.output);
      sink = &file;
    }
    if (*compute) return cmd_compute(resolve(inputs, edge_files, graph6_files), cfg, *sink, err);
    if (*spectrum) return cmd_spectrum(resolve(inputs, edge_files, graph6_files), cfg, *sink);
    if (*classify_cmd) return cmd_classify(resolve(inputs, edge_files, graph6_files), cfg, *sink);
    if (*embed_cmd) return cmd_embed(resolve(inputs, edge_files, graph6_files), cfg, *sink, err);
    if (*family) return cmd_family(family_specs, cfg, *sink);
    if (*ladder_cmd) return cmd_ladder(max_n, cfg, *sink);
    if (*scan_cmd) return cmd_scan(enumerate, scan_file, scan_verify, cfg, *sink, err);
    if (*verify) return cmd_verify(which, verify_n, cfg, *sink);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kNotQEClass ? kNotQEClass : kInputError;
  }
  return kInputError;
}

}  // namespace qec::cli
