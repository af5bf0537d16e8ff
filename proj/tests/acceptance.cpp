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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Runtime limits are part of each criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qec/classify.hpp"
#include "qec/engine.hpp"
#include "qec/enumerate.hpp"
#include "qec/error.hpp"
#include "qec/families.hpp"
#include "qec/graph.hpp"
#include "qec/parallel.hpp"
#include "qec/patterns.hpp"
#include "test_support.hpp"

namespace {

using qec::Graph;

constexpr double kTol = 1e-9;

// Collects the first few failure reasons of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failures_ == 0; }
  std::string notes() const {
    if (failures_ <= 3) return notes_;
    return notes_ + "; +" + std::to_string(failures_ - 3) + " more";
  }
  std::string info;

 private:
  int failures_ = 0;
  std::string notes_;
};

int g_failed = 0;

void criterion(const char* id, const char* title, double limit_s,
               const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char limit[64];
  std::snprintf(limit, sizeof limit, "%.3fs, limit %gs", secs, limit_s);
  c.expect(secs < limit_s, "runtime over limit");
  if (!c.ok()) ++g_failed;
  std::printf("%s %s  %s (%s)%s%s%s%s\n", id, c.ok() ? "PASS" : "FAIL", title, limit,
              c.info.empty() ? "" : " ", c.info.c_str(), c.ok() ? "" : " -- ",
              c.notes().c_str());
  std::fflush(stdout);
}

double value(const Graph& g) { return qec::qec(g).value; }

std::string g6(const Graph& g) { return qec::write_graph6(g); }

std::string canonical_g6(const Graph& g) {
  return qec::write_graph6(qec::to_graph(qec::canonical_form(g)));
}

}  // namespace

int main() {
  const int shards = qec::default_shards();
  std::printf("acceptance suite, %d shard(s)\n", shards);

  criterion("AC1", "path values P2..P6", 1.0, [](Check& c) {
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0);
    const double want[] = {-1.0, -2.0 / 3.0, -(2.0 - r2), -(5.0 - r5) / 5.0, -(4.0 - 2.0 * r3)};
    double worst = 0.0;
    for (int n = 2; n <= 6; ++n) {
      const double err = std::abs(value(qec::path(n)) - want[n - 2]);
      worst = std::max(worst, err);
      c.expect(err <= kTol, "P" + std::to_string(n));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max error %.2e", worst);
    c.info = buf;
  });

  criterion("AC2", "ladder P2..P30 strictly increasing, below -1/2", 5.0, [](Check& c) {
    double prev = -2.0;
    double last = 0.0;
    for (int n = 2; n <= 30; ++n) {
      last = value(qec::path(n));
      c.expect(last > prev, "not increasing at n=" + std::to_string(n));
      c.expect(last < -0.5, "not below -1/2 at n=" + std::to_string(n));
      prev = last;
    }
    c.expect(last > -0.52, "QEC(P30) <= -0.52");
    // the library's own ladder must agree and validate
    const auto l = qec::ladder(30);
    c.expect(l.size() == 29 && l.back().value == last, "ladder() disagrees");
    char buf[64];
    std::snprintf(buf, sizeof buf, "QEC(P30) = %.12g", last);
    c.info = buf;
  });

  criterion("AC3", "closed forms: K_n, C_n, K_n*K_m, BK_n,m, K3*K3", 10.0, [](Check& c) {
    int checked = 0;
    const auto near = [&](double a, double b, const std::string& what) {
      ++checked;
      c.expect(std::abs(a - b) <= kTol, what);
    };
    for (int n = 2; n <= 10; ++n) near(value(qec::complete(n)), qec::qec_formula_complete(n), "K");
    for (int n = 3; n <= 12; ++n) near(value(qec::cycle(n)), qec::qec_formula_cycle(n), "C");
    for (int n = 1; n <= 8; ++n)
      for (int m = 1; m <= 8; ++m)
        if (n + m >= 3)
          near(value(qec::star_product_complete(n, m)), qec::qec_formula_star_kk(n, m),
               "KsK " + std::to_string(n) + "," + std::to_string(m));
    for (int n = 2; n <= 8; ++n)
      for (int m = 2; m <= n; ++m)
        near(value(qec::bearded_complete(n, m)), -(2.0 - std::sqrt(2.0)),
             "BK " + std::to_string(n) + "," + std::to_string(m));
    near(value(qec::star_product_complete(3, 3)), -0.6, "K3*K3");
    c.info = std::to_string(checked) + " comparisons";
  });

  criterion("AC4", "sandwich on connected graphs n <= 6; lambda2 equality", 30.0, [](Check& c) {
    const auto graphs = qec::enumerate_connected_range(2, 6);
    for (const Graph& g : graphs) {
      const double q = value(g);
      const auto s = qec::distance_spectrum(g);
      c.expect(s.lambda2 - kTol <= q && q < s.lambda1, "sandwich fails on " + g6(g));
    }
    int regular = 0;
    for (int n = 3; n <= 12; ++n, ++regular)
      c.expect(std::abs(value(qec::cycle(n)) - qec::distance_spectrum(qec::cycle(n)).lambda2) <=
                   kTol,
               "C" + std::to_string(n));
    for (int n = 2; n <= 10; ++n, ++regular)
      c.expect(std::abs(value(qec::complete(n)) -
                        qec::distance_spectrum(qec::complete(n)).lambda2) <= kTol,
               "K" + std::to_string(n));
    // K1 has no QE constant, so the n <= 6 corpus contributes 142 graphs
    c.expect(graphs.size() == 142, "corpus size " + std::to_string(graphs.size()));
    c.info = std::to_string(graphs.size()) + " graphs, " + std::to_string(regular) +
             " transmission-regular";
  });

  // Criteria 5-7 share one enumeration and scan.
  std::vector<Graph> corpus7;
  std::vector<qec::ClassificationReport> reports7;
  double scan_seconds = 0.0;

  criterion("AC5", "forbidden subgraphs on the exhaustive n <= 7 corpus", 600.0, [&](Check& c) {
    const auto start = std::chrono::steady_clock::now();
    corpus7 = qec::enumerate_connected_range(2, 7, shards);
    reports7 = qec::scan(corpus7, qec::ladder(qec::kVerificationLadder, shards), kTol, shards);
    scan_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.expect(corpus7.size() == 995, "corpus size " + std::to_string(corpus7.size()));
    const double c5 = -2.0 / (3.0 + std::sqrt(5.0));
    int below = 0;
    for (const auto& r : reports7) {
      if (r.error) {
        c.expect(false, r.graph6 + ": " + *r.error);
        continue;
      }
      const auto& p = r.pattern;
      if (!p.diamond_free || !p.claw_free)
        c.expect(r.qec >= -0.5 - kTol, "diamond/claw bound on " + r.graph6);
      if (!p.c4_free) c.expect(r.qec >= -kTol, "C4 bound on " + r.graph6);
      if (!p.c5_free) c.expect(r.qec >= c5 - kTol, "C5 bound on " + r.graph6);
      if (r.qec < -0.5) {
        ++below;
        c.expect(p.all_free(), "screen fails on " + r.graph6);
      }
    }
    c.info = std::to_string(corpus7.size()) + " graphs, " + std::to_string(below) +
             " below -1/2";
  });

  criterion("AC6", "class 2 over n <= 7 is exactly K2..K7", 600.0, [&](Check& c) {
    const auto rec = qec::verify_class2(reports7, 7, kTol);
    c.expect(rec.passed, "verification failed");
    for (const auto& x : rec.counterexamples) c.expect(false, x);
    std::set<std::string> want;
    for (int n = 2; n <= 7; ++n) want.insert(canonical_g6(qec::complete(n)));
    c.expect(std::set<std::string>(rec.members.begin(), rec.members.end()) == want,
             "member set differs");
    const double p3 = -2.0 / 3.0;
    for (const auto& r : reports7) {
      if (r.error) continue;
      if (r.class_index == 2) c.expect(std::abs(r.qec + 1.0) <= kTol, "member off -1: " + r.graph6);
      c.expect(!(r.qec > -1.0 + kTol && r.qec < p3 - kTol), "strictly between: " + r.graph6);
    }
    c.info = std::to_string(rec.members.size()) + " members";
  });

  criterion("AC7", "class 3 over n <= 7 is P3, K3..K6 * K2, K3*K3", 600.0, [&](Check& c) {
    const auto rec = qec::verify_class3(reports7, 7, kTol);
    c.expect(rec.passed, "verification failed");
    for (const auto& x : rec.counterexamples) c.expect(false, x);
    std::set<std::string> want{canonical_g6(qec::path(3)),
                               canonical_g6(qec::star_product_complete(3, 3))};
    for (int n = 3; n <= 6; ++n) want.insert(canonical_g6(qec::star_product_complete(n, 2)));
    c.expect(std::set<std::string>(rec.members.begin(), rec.members.end()) == want,
             "member set differs");
    const std::string p3 = canonical_g6(qec::path(3));
    for (const auto& r : reports7) {
      if (r.error || r.class_index != 3) continue;
      const bool at_p3 = std::abs(r.qec + 2.0 / 3.0) <= kTol;
      c.expect(at_p3 == (r.graph6 == p3), "equality at QEC(P3) on " + r.graph6);
    }
    c.info = std::to_string(rec.members.size()) + " members; shared scan " +
             std::to_string(scan_seconds).substr(0, 5) + "s";
  });

  criterion("AC8", "star-product strictness and bound", 120.0, [](Check& c) {
    int strict = 0, pairs = 0;
    const auto small = qec::enumerate_connected_range(2, 5);
    for (const Graph& g : small) {
      const double q = value(g);
      const int n = g.order();
      if (q >= -kTol || !qec::star_strictness_hypothesis(g, n, kTol)) continue;
      for (int m = 1; m <= 3; ++m) {
        const double s = value(qec::star_product(g, n, qec::complete(m + 1), 1));
        ++strict;
        c.expect(q + kTol < s && s < 0.0,
                 "strictness on " + g6(g) + " m=" + std::to_string(m));
      }
    }
    const auto tiny = qec::enumerate_connected_range(2, 4);
    for (const Graph& g1 : tiny) {
      const double q1 = value(g1);
      if (q1 >= -kTol) continue;
      for (const Graph& g2 : tiny) {
        const double q2 = value(g2);
        if (q2 >= -kTol) continue;
        const double bound = qec::star_product_bound(q1, q2);
        for (int r1 = 1; r1 <= g1.order(); ++r1)
          for (int r2 = 1; r2 <= g2.order(); ++r2, ++pairs)
            c.expect(bound >= value(qec::star_product(g1, r1, g2, r2)) - kTol,
                     "bound on " + g6(g1) + "*" + g6(g2));
      }
    }
    c.info = std::to_string(strict) + " strict cases, " + std::to_string(pairs) + " rooted pairs";
  });

  criterion("AC9", "embedding reproduces distances or fails with NotQEClass", 60.0, [](Check& c) {
    int embedded = 0, refused = 0;
    for (const Graph& g : qec::enumerate_connected_range(2, 6)) {
      const double q = value(g);
      if (q <= kTol) {
        const auto e = qec::embed(g, 1e-8);
        const auto d = qec::distance_matrix(g);
        double worst = 0.0;
        for (int i = 0; i < g.order(); ++i)
          for (int j = 0; j < g.order(); ++j) {
            double s = 0.0;
            for (int k = 0; k < e.dim; ++k) s += std::pow(e.points[i][k] - e.points[j][k], 2);
            worst = std::max(worst, std::abs(s - d(i, j)));
          }
        c.expect(worst <= 1e-8, "embedding error on " + g6(g));
        ++embedded;
      } else if (q > 1e-6) {
        bool threw = false;
        try {
          qec::embed(g, 1e-8);
        } catch (const qec::Error& e) {
          threw = e.code() == qec::ErrorCode::kNotQEClass;
        }
        c.expect(threw, "no NotQEClass on " + g6(g));
        ++refused;
      }
    }
    c.info = std::to_string(embedded) + " embedded, " + std::to_string(refused) + " refused";
  });

  criterion("AC10", "projected ascent oracle (200 starts) on n <= 5", 120.0, [](Check& c) {
    std::mt19937 rng(12345);
    double worst_gap = 0.0, worst_excess = -1.0;
    for (const Graph& g : qec::enumerate_connected_range(2, 5)) {
      const double engine = value(g);
      const auto d = qec::testing::dense_distances(g);
      double best = -1e300;
      for (int s = 0; s < 200; ++s) {
        const double v = qec::testing::projected_ascent(d, rng);
        worst_excess = std::max(worst_excess, v - engine);
        c.expect(v <= engine + kTol, "ascent exceeds engine on " + g6(g));
        best = std::max(best, v);
      }
      worst_gap = std::max(worst_gap, engine - best);
      c.expect(engine - best <= 1e-7, "ascent short of engine on " + g6(g));
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "max shortfall %.2e, max excess %.2e", worst_gap, worst_excess);
    c.info = buf;
  });

  criterion("AC11", "graph6 round trip; counts under two iteration orders", 600.0, [&](Check& c) {
    const std::size_t want[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
      const auto up = qec::enumerate_connected(n, shards, qec::IterationOrder::kAscending);
      const auto down = qec::enumerate_connected(n, shards, qec::IterationOrder::kDescending);
      c.expect(up.size() == want[n - 1], "ascending count at n=" + std::to_string(n));
      c.expect(down.size() == want[n - 1], "descending count at n=" + std::to_string(n));
      c.expect(up == down, "orders disagree at n=" + std::to_string(n));
      if (n <= 6) {
        for (const Graph& g : up) c.expect(qec::parse_graph6(g6(g)) == g, "round trip " + g6(g));
      }
    }
    c.info = "counts 1,1,2,6,21,112,853";
  });

  std::printf("%s: %d criterion(s) failed\n", g_failed == 0 ? "ALL PASS" : "FAILURES", g_failed);
  return g_failed == 0 ? 0 : 1;
}
