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

#include "qec/patterns.hpp"

#include <array>

#include "qec/error.hpp"
#include "qec/families.hpp"

namespace qec {
namespace {

class InducedMatcher {
 public:
  InducedMatcher(const Graph& g, const Graph& pattern)
      : g_(g), p_(pattern), k_(pattern.order()) {
    for (int a = 0; a < k_; ++a) {
      pattern_degree_[static_cast<std::size_t>(a)] = p_.degree(a + 1);
    }
    for (int v = 0; v < g_.order(); ++v) graph_degree_.push_back(g_.degree(v + 1));
  }

  std::optional<VertexTuple> run() {
    if (k_ > g_.order()) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    VertexTuple out(static_cast<std::size_t>(k_));
    for (int a = 0; a < k_; ++a) out[static_cast<std::size_t>(a)] = chosen_[static_cast<std::size_t>(a)] + 1;
    return out;
  }

 private:
  bool extend(int depth) {
    if (depth == k_) return true;
    for (int v = 0; v < g_.order(); ++v) {
      // Induced copies need at least the pattern degree in g.
      if (graph_degree_[static_cast<std::size_t>(v)] < pattern_degree_[static_cast<std::size_t>(depth)]) continue;
      bool ok = true;
      for (int a = 0; a < depth && ok; ++a) {
        const int u = chosen_[static_cast<std::size_t>(a)];
        ok = u != v && g_.adj0(u, v) == p_.adj0(a, depth);
      }
      if (!ok) continue;
      chosen_[static_cast<std::size_t>(depth)] = v;
      if (extend(depth + 1)) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& p_;
  int k_;
  std::array<int, kMaxPatternOrder> pattern_degree_{};
  std::array<int, kMaxPatternOrder> chosen_{};
  std::vector<int> graph_degree_;
};

}  // namespace

std::optional<VertexTuple> contains_induced(const Graph& g, const Graph& pattern) {
  if (pattern.order() > kMaxPatternOrder) {
    throw Error(ErrorCode::kPatternTooLarge,
                "patterns are limited to 5 vertices, got " +
                    std::to_string(pattern.order()));
  }
  return InducedMatcher(g, pattern).run();
}

PatternReport forbidden_screen(const Graph& g) {
  static const Graph kDiamond = diamond();
  static const Graph kClaw = claw();
  static const Graph kC4 = cycle(4);
  static const Graph kC5 = cycle(5);
  PatternReport r;
  r.diamond_witness = contains_induced(g, kDiamond);
  r.claw_witness = contains_induced(g, kClaw);
  r.c4_witness = contains_induced(g, kC4);
  r.c5_witness = contains_induced(g, kC5);
  r.diamond_free = !r.diamond_witness;
  r.claw_free = !r.claw_witness;
  r.c4_free = !r.c4_witness;
  r.c5_free = !r.c5_witness;
  return r;
}

bool is_isometric_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  const Graph h = g.induced(vertices);
  if (!is_connected(h)) {
    throw Error(ErrorCode::kDisconnectedSubgraph,
                "induced subgraph is disconnected");
  }
  const auto dg = distance_matrix(g);
  const auto dh = distance_matrix(h);
  const int k = h.order();
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (dh(a, b) != dg(vertices[static_cast<std::size_t>(a)] - 1,
                         vertices[static_cast<std::size_t>(b)] - 1)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qec
