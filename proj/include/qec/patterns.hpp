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

// Induced-subgraph screening for the four patterns that rule out
// QEC < -1/2 (diamond, claw, C4, C5), plus isometric-subgraph checks.

#ifndef QEC_PATTERNS_HPP_
#define QEC_PATTERNS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "qec/graph.hpp"

namespace qec {

inline constexpr int kMaxPatternOrder = 5;

using VertexTuple = std::vector<Vertex>;

// Lexicographically first ordered tuple (v_1, ..., v_k) of distinct vertices
// of g with g[v_a] ~ g[v_b] exactly when pattern vertex a ~ b. Throws
// kPatternTooLarge for patterns on more than five vertices.
std::optional<VertexTuple> contains_induced(const Graph& g, const Graph& pattern);

struct PatternReport {
  bool diamond_free = true;
  bool claw_free = true;
  bool c4_free = true;
  bool c5_free = true;
  std::optional<VertexTuple> diamond_witness;
  std::optional<VertexTuple> claw_witness;
  std::optional<VertexTuple> c4_witness;
  std::optional<VertexTuple> c5_witness;

  bool all_free() const noexcept {
    return diamond_free && claw_free && c4_free && c5_free;
  }
};

PatternReport forbidden_screen(const Graph& g);

// Whether the subgraph induced on `vertices` keeps the ambient distances.
// Throws kDisconnectedSubgraph if the induced subgraph is disconnected.
bool is_isometric_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace qec

#endif  // QEC_PATTERNS_HPP_
