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

// Simple undirected graphs, shortest-path distances and the two text
// interchange formats (graph6 and a 1-based edge list).
//
// Vertex arguments are 1-based throughout, matching the usual {1, ..., n}
// labelling. Matrix and vector indices (DistanceMatrix, maximizer vectors)
// are 0-based like any other array, so vertex v lives at index v - 1.

#ifndef QEC_GRAPH_HPP_
#define QEC_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple graph stored as one adjacency bitset per vertex.
class Graph {
 public:
  // Throws kInvalidParameter for n < 1, kInvalidVertex for loops or
  // out-of-range endpoints. Duplicate edges are merged.
  Graph(int n, std::span<const Edge> edges);
  explicit Graph(int n) : Graph(n, {}) {}

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept;

  bool adjacent(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;  // sorted, u < v

  // Subgraph induced on `vertices`; vertex vertices[k] becomes k + 1.
  Graph induced(std::span<const Vertex> vertices) const;
  // Vertex v of this graph becomes new_label[v - 1] in the result.
  Graph relabeled(std::span<const Vertex> new_label) const;

  // 0-based hot-path accessors used by the search routines.
  bool adj0(int i, int j) const noexcept {
    return (row_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >>
            (j & 63)) & 1u;
  }
  std::span<const std::uint64_t> row0(int i) const noexcept {
    return {row_.data() + static_cast<std::size_t>(i) * words_,
            static_cast<std::size_t>(words_)};
  }
  int words() const noexcept { return words_; }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  int n_;
  int words_;
  std::vector<std::uint64_t> row_;
};

// Shortest-path lengths (hop counts); 0-based indices.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> entries)
      : n_(n), d_(std::move(entries)) {}

  int order() const noexcept { return n_; }
  int operator()(int i, int j) const noexcept {
    return d_[static_cast<std::size_t>(i) * n_ + j];
  }
  std::span<const int> data() const noexcept { return d_; }
  int max_entry() const noexcept;

  bool operator==(const DistanceMatrix&) const = default;

 private:
  int n_;
  std::vector<int> d_;
};

bool is_connected(const Graph& g);

// BFS from every vertex. Throws kDisconnectedGraph.
DistanceMatrix distance_matrix(const Graph& g);

// Throws kDisconnectedGraph.
int diameter(const Graph& g);

bool is_complete(const Graph& g);

// graph6: 6-bit groups offset by 63, upper triangle in column order.
// Sizes up to 258047 vertices (the 4-byte size prefix) are supported.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Edge list: "n m" then m lines "u v", 1-based, u < v on output.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace qec

#endif  // QEC_GRAPH_HPP_
