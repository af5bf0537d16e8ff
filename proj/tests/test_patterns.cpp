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

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "qec/engine.hpp"
#include "qec/error.hpp"
#include "qec/families.hpp"
#include "qec/graph.hpp"
#include "qec/patterns.hpp"
#include "test_support.hpp"

namespace {

using qec::Graph;
using qec::Vertex;

std::vector<Vertex> range(int lo, int hi) {
  std::vector<Vertex> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("induced pattern examples") {
  const auto claw = qec::contains_induced(qec::claw(), qec::claw());
  REQUIRE(claw.has_value());
  CHECK(*claw == std::vector<Vertex>{1, 2, 3, 4});
  for (const Graph& p : {qec::diamond(), qec::claw(), qec::cycle(4), qec::cycle(5)}) {
    CHECK_FALSE(qec::contains_induced(qec::path(4), p).has_value());
  }
  CHECK_FALSE(qec::contains_induced(qec::complete(4), qec::diamond()).has_value());
  CHECK(qec::contains_induced(qec::complete(5), qec::complete(3)).has_value());
  CHECK_FALSE(qec::contains_induced(qec::complete(3), qec::complete(4)).has_value());
  CHECK_THROWS_AS(qec::contains_induced(qec::complete(7), qec::path(6)), qec::Error);
  try {
    qec::contains_induced(qec::complete(7), qec::path(6));
  } catch (const qec::Error& e) {
    CHECK(e.code() == qec::ErrorCode::kPatternTooLarge);
  }
}

TEST_CASE("forbidden screen") {
  for (int n = 1; n <= 8; ++n) {
    const auto r = qec::forbidden_screen(qec::star_product_complete(n, 2));
    CHECK(r.all_free());
    CHECK_FALSE(r.diamond_witness.has_value());
  }
  const auto c5 = qec::forbidden_screen(qec::cycle(5));
  CHECK_FALSE(c5.c5_free);
  CHECK(c5.c4_free);
  CHECK(c5.claw_free);
  CHECK(c5.diamond_free);
  REQUIRE(c5.c5_witness.has_value());
  CHECK(*c5.c5_witness == std::vector<Vertex>{1, 2, 3, 4, 5});
  const auto k23 = qec::forbidden_screen(qec::complete_bipartite(2, 3));
  CHECK_FALSE(k23.c4_free);
  CHECK_FALSE(k23.all_free());
  CHECK_FALSE(qec::forbidden_screen(qec::diamond()).diamond_free);
}

TEST_CASE("induced search agrees with the naive oracle") {
  const std::vector<Graph> patterns{qec::diamond(), qec::claw(),     qec::cycle(4),
                                    qec::cycle(5),  qec::path(4),    qec::path(3),
                                    qec::complete(4), qec::complete_bipartite(2, 3)};
  for (const Graph& g : qec::testing::corpus(6, 1)) {
    for (const Graph& p : patterns) {
      const auto fast = qec::contains_induced(g, p);
      const auto slow = qec::testing::naive_induced(g, p);
      if (fast != slow) FAIL("mismatch on " << qec::write_graph6(g) << " / " << qec::write_graph6(p));
    }
  }
  // witnesses really span an induced copy, with the pattern's labelling
  const Graph g = qec::parse_graph6("E~~w");
  const auto w = qec::contains_induced(g, qec::complete(5));
  REQUIRE(w.has_value());
  CHECK(g.induced(*w) == qec::complete(5));
}

TEST_CASE("isometric subgraphs") {
  const Graph c6 = qec::cycle(6);
  CHECK_FALSE(qec::is_isometric_subgraph(c6, range(1, 5)));
  CHECK(qec::is_isometric_subgraph(c6, range(1, 4)));
  CHECK(qec::is_isometric_subgraph(c6, range(1, 6)));
  const std::vector<Vertex> apart{1, 4};
  CHECK_THROWS_AS(qec::is_isometric_subgraph(c6, apart), qec::Error);
  try {
    qec::is_isometric_subgraph(c6, apart);
  } catch (const qec::Error& e) {
    CHECK(e.code() == qec::ErrorCode::kDisconnectedSubgraph);
  }

  for (const Graph& gr : qec::testing::corpus(6)) {
    const int n = gr.order();
    CHECK(qec::is_isometric_subgraph(gr, range(1, n)));
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Vertex> vs;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) vs.push_back(v + 1);
      const Graph h = gr.induced(vs);
      if (!qec::is_connected(h) || qec::diameter(h) > 2) continue;
      if (!qec::is_isometric_subgraph(gr, vs)) FAIL("diameter-2 subgraph not isometric");
    }
  }
}

TEST_CASE("screen is consistent with QEC bounds") {
  const double c5 = -2.0 / (3.0 + std::sqrt(5.0));
  for (const Graph& g : qec::testing::corpus(7)) {
    const double q = qec::qec(g).value;
    const auto r = qec::forbidden_screen(g);
    if ((!r.diamond_free || !r.claw_free) && q < -0.5 - 1e-9)
      FAIL("diamond/claw bound fails on " << qec::write_graph6(g));
    if (!r.c4_free && q < -1e-9) FAIL("C4 bound fails on " << qec::write_graph6(g));
    if (!r.c5_free && q < c5 - 1e-9) FAIL("C5 bound fails on " << qec::write_graph6(g));
    if (q < -0.5 && !r.all_free()) FAIL("screen fails on " << qec::write_graph6(g));
  }
}
