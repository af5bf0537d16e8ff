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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "qec/enumerate.hpp"
#include "qec/error.hpp"
#include "qec/families.hpp"
#include "qec/graph.hpp"
#include "test_support.hpp"

namespace {

using qec::ErrorCode;
using qec::Graph;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const qec::Error& e) {
    return e.code();
  }
  FAIL("expected qec::Error");
  return ErrorCode::kTheoremViolation;
}

Graph shuffled(const Graph& g, std::mt19937& rng) {
  std::vector<qec::Vertex> label(static_cast<std::size_t>(g.order()));
  std::iota(label.begin(), label.end(), 1);
  std::shuffle(label.begin(), label.end(), rng);
  return g.relabeled(label);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("qec_test_" + name);
}

}  // namespace

TEST_CASE("canonical form basics") {
  const std::vector<qec::Vertex> centre_first{2, 1, 3};
  CHECK(qec::canonical_form(qec::path(3)) ==
        qec::canonical_form(qec::path(3).relabeled(centre_first)));
  CHECK(qec::canonical_form(qec::cycle(4)) != qec::canonical_form(qec::claw()));
  CHECK(qec::canonical_form(qec::star_product_complete(3, 2)) ==
        qec::canonical_form(qec::bearded_complete(3, 1)));
  CHECK(qec::to_graph(qec::canonical_form(qec::cycle(5))).order() == 5);
  CHECK(qec::testing::isomorphic(qec::to_graph(qec::canonical_form(qec::cycle(5))),
                                 qec::cycle(5)));
  CHECK(code_of([] { qec::canonical_form(qec::path(10)); }) ==
        ErrorCode::kTooLargeForCanonical);
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937 rng(99);
  for (const Graph& g : qec::testing::corpus(6, 1)) {
    const auto form = qec::canonical_form(g);
    for (int k = 0; k < 100; ++k) {
      if (qec::canonical_form(shuffled(g, rng)) != form) FAIL("not invariant: " << qec::write_graph6(g));
    }
  }
  // the largest supported order, including regular graphs that stress refinement
  std::vector<Graph> nine{qec::cycle(9), qec::complete_bipartite(4, 5),
                          qec::star_product(qec::cycle(4), 1, qec::cycle(6), 1)};
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << 36) - 1);
  for (int k = 0; k < 40; ++k) nine.push_back(qec::testing::labelled_graph(9, bits(rng)));
  for (const Graph& g : nine) {
    const auto form = qec::canonical_form(g);
    for (int k = 0; k < 100; ++k) REQUIRE(qec::canonical_form(shuffled(g, rng)) == form);
  }
}

TEST_CASE("canonical forms separate exactly the isomorphism classes") {
  // every pair of labelled graphs on four vertices, against brute force
  std::vector<Graph> all;
  for (std::uint64_t s = 0; s < 64; ++s) all.push_back(qec::testing::labelled_graph(4, s));
  for (const Graph& a : all) {
    for (const Graph& b : all) {
      const bool same = qec::canonical_form(a) == qec::canonical_form(b);
      if (same != qec::testing::isomorphic(a, b)) FAIL("canonical form disagrees with brute force");
    }
  }
  // representatives are pairwise non-isomorphic
  for (int n = 2; n <= 6; ++n) {
    const auto reps = qec::enumerate_connected(n);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        if (qec::testing::isomorphic(reps[i], reps[j])) FAIL("duplicate class at n=" << n);
  }
}

TEST_CASE("enumeration counts") {
  const std::vector<std::size_t> want{1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    const auto up = qec::enumerate_connected(n, 1, qec::IterationOrder::kAscending);
    const auto down = qec::enumerate_connected(n, 1, qec::IterationOrder::kDescending);
    CHECK(up.size() == want[static_cast<std::size_t>(n - 1)]);
    CHECK(up == down);
    if (n <= 6) CHECK(qec::enumerate_connected(n, 3) == up);
    for (const Graph& g : up) REQUIRE(qec::is_connected(g));
  }
  CHECK(qec::enumerate_connected_range(2, 4).size() == 1 + 2 + 6);
  CHECK(code_of([] { qec::enumerate_connected(8); }) == ErrorCode::kTooLargeForEnumeration);
  CHECK(code_of([] { qec::enumerate_connected(0); }) == ErrorCode::kInvalidParameter);
}

TEST_CASE("every connected labelled graph has exactly one representative") {
  for (int n = 1; n <= 5; ++n) {
    std::set<qec::CanonicalForm> reps;
    for (const Graph& g : qec::enumerate_connected(n)) reps.insert(qec::canonical_form(g));
    std::set<qec::CanonicalForm> hit;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << pairs); ++s) {
      const Graph g = qec::testing::labelled_graph(n, s);
      if (!qec::is_connected(g)) continue;
      const auto form = qec::canonical_form(g);
      REQUIRE(reps.count(form) == 1);
      hit.insert(form);
    }
    CHECK(hit == reps);
  }
}

TEST_CASE("graph6 files") {
  const auto path = temp_file("round_trip.g6");
  const auto graphs = qec::enumerate_connected(4);
  qec::write_graph6_file(path, graphs);
  CHECK(qec::ingest_graph6(path) == graphs);

  const auto empty = temp_file("empty.g6");
  { std::ofstream(empty).flush(); }
  CHECK(qec::ingest_graph6(empty).empty());

  const auto corrupt = temp_file("corrupt.g6");
  {
    std::ofstream out(corrupt);
    out << "Bw\nB!\nCF\n";
  }
  try {
    qec::ingest_graph6(corrupt);
    FAIL("expected MalformedGraph6");
  } catch (const qec::Error& e) {
    CHECK(e.code() == ErrorCode::kMalformedGraph6);
    CHECK(e.line() == std::size_t{2});
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  CHECK(code_of([] { qec::ingest_graph6(temp_file("does_not_exist.g6")); }) ==
        ErrorCode::kIoError);

  std::istringstream in(">>graph6<<A_\n\nBw\r\n");
  CHECK(qec::read_graph6(in) == std::vector<Graph>{qec::complete(2), qec::complete(3)});

  std::filesystem::remove(path);
  std::filesystem::remove(empty);
  std::filesystem::remove(corrupt);
}
