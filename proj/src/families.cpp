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

#include "qec/families.hpp"

#include <charconv>
#include <tuple>
#include <vector>

#include "qec/error.hpp"

namespace qec {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidParameter, message);
}

std::vector<Edge> clique_edges(int first, int last) {
  std::vector<Edge> edges;
  for (int i = first; i <= last; ++i) {
    for (int j = i + 1; j <= last; ++j) edges.emplace_back(i, j);
  }
  return edges;
}

int parse_int(std::string_view text, std::string_view context) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  require(ec == std::errc() && ptr == end && !text.empty() && value >= 1,
          "bad integer \"" + std::string(text) + "\" in " + std::string(context));
  return value;
}

std::pair<int, int> parse_pair(std::string_view text, std::string_view context) {
  const auto comma = text.find(',');
  require(comma != std::string_view::npos,
          std::string(context) + " expects two parameters \"a,b\"");
  return {parse_int(text.substr(0, comma), context),
          parse_int(text.substr(comma + 1), context)};
}

// "<graph6>@<vertex>"
std::pair<std::string, Vertex> parse_rooted(std::string_view text) {
  const auto at = text.rfind('@');
  require(at != std::string_view::npos && at > 0,
          "SP operands must look like <graph6>@<vertex>");
  return {std::string(text.substr(0, at)), parse_int(text.substr(at + 1), "SP")};
}

}  // namespace

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(1, n);
  return Graph(n, edges);
}

Graph complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  return Graph(n, clique_edges(1, n));
}

Graph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "complete bipartite graph needs m, n >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) {
    for (int j = m + 1; j <= m + n; ++j) edges.emplace_back(i, j);
  }
  return Graph(m + n, edges);
}

Graph star_product(const Graph& g1, Vertex root1, const Graph& g2,
                   Vertex root2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (root1 < 1 || root1 > n1 || root2 < 1 || root2 > n2) {
    throw Error(ErrorCode::kInvalidVertex, "star product root out of range");
  }
  if (!is_connected(g1) || !is_connected(g2)) {
    throw Error(ErrorCode::kDisconnectedGraph,
                "star product factors must be connected");
  }
  // g2 vertex v maps to root1 if v == root2, else to the next fresh label.
  std::vector<Vertex> label(static_cast<std::size_t>(n2));
  Vertex next = n1 + 1;
  for (Vertex v = 1; v <= n2; ++v) {
    label[static_cast<std::size_t>(v - 1)] = (v == root2) ? root1 : next++;
  }
  auto edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) {
    edges.emplace_back(label[static_cast<std::size_t>(u - 1)],
                       label[static_cast<std::size_t>(v - 1)]);
  }
  return Graph(n1 + n2 - 1, edges);
}

Graph star_product_complete(int n, int m) {
  require(n >= 1 && m >= 1, "K_n star K_m needs n, m >= 1");
  return star_product(complete(n), n, complete(m), 1);
}

Graph bearded_complete(int n, int m) {
  require(1 <= m && m <= n, "BK_{n,m} needs 1 <= m <= n");
  auto edges = clique_edges(1, n);
  for (int i = 1; i <= m; ++i) edges.emplace_back(i, n + i);
  return Graph(n + m, edges);
}

Graph diamond() {
  const std::vector<Edge> edges = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
  return Graph(4, edges);
}

Graph claw() { return complete_bipartite(1, 3); }

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  require(colon != std::string_view::npos,
          "family spec must look like KIND:params, got \"" + std::string(text) +
              "\"");
  const auto kind = text.substr(0, colon);
  const auto params = text.substr(colon + 1);
  FamilySpec spec{};
  if (kind == "P" || kind == "C" || kind == "K") {
    spec.kind = kind == "P"   ? FamilySpec::Kind::kPath
                : kind == "C" ? FamilySpec::Kind::kCycle
                              : FamilySpec::Kind::kComplete;
    spec.a = parse_int(params, kind);
  } else if (kind == "Kb" || kind == "KsK" || kind == "BK") {
    spec.kind = kind == "Kb"    ? FamilySpec::Kind::kCompleteBipartite
                : kind == "KsK" ? FamilySpec::Kind::kStarProductKK
                                : FamilySpec::Kind::kBeardedComplete;
    std::tie(spec.a, spec.b) = parse_pair(params, kind);
  } else if (kind == "SP") {
    spec.kind = FamilySpec::Kind::kStarProductGeneral;
    const auto comma = params.find(',');
    require(comma != std::string_view::npos,
            "SP expects <g6>@<v>,<g6>@<v>");
    std::tie(spec.graph6_1, spec.root1) = parse_rooted(params.substr(0, comma));
    std::tie(spec.graph6_2, spec.root2) = parse_rooted(params.substr(comma + 1));
  } else {
    require(false, "unknown family \"" + std::string(kind) + "\"");
  }
  return spec;
}

Graph build(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilySpec::Kind::kPath: return path(spec.a);
    case FamilySpec::Kind::kCycle: return cycle(spec.a);
    case FamilySpec::Kind::kComplete: return complete(spec.a);
    case FamilySpec::Kind::kCompleteBipartite:
      return complete_bipartite(spec.a, spec.b);
    case FamilySpec::Kind::kStarProductKK:
      return star_product_complete(spec.a, spec.b);
    case FamilySpec::Kind::kBeardedComplete:
      return bearded_complete(spec.a, spec.b);
    case FamilySpec::Kind::kStarProductGeneral:
      return star_product(parse_graph6(spec.graph6_1), spec.root1,
                          parse_graph6(spec.graph6_2), spec.root2);
  }
  throw Error(ErrorCode::kInvalidParameter, "unknown family kind");
}

std::string to_string(const FamilySpec& spec) {
  const auto one = [&](const char* k) { return std::string(k) + ":" + std::to_string(spec.a); };
  const auto two = [&](const char* k) {
    return std::string(k) + ":" + std::to_string(spec.a) + "," + std::to_string(spec.b);
  };
  switch (spec.kind) {
    case FamilySpec::Kind::kPath: return one("P");
    case FamilySpec::Kind::kCycle: return one("C");
    case FamilySpec::Kind::kComplete: return one("K");
    case FamilySpec::Kind::kCompleteBipartite: return two("Kb");
    case FamilySpec::Kind::kStarProductKK: return two("KsK");
    case FamilySpec::Kind::kBeardedComplete: return two("BK");
    case FamilySpec::Kind::kStarProductGeneral:
      return "SP:" + spec.graph6_1 + "@" + std::to_string(spec.root1) + "," +
             spec.graph6_2 + "@" + std::to_string(spec.root2);
  }
  return {};
}

}  // namespace qec
