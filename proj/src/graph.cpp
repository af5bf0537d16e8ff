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

#include "qec/graph.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <queue>
#include <sstream>

#include "qec/error.hpp"

namespace qec {
namespace {

constexpr int kGraph6Offset = 63;
constexpr int kGraph6ShortMax = 62;
constexpr int kGraph6LongMax = 258047;

std::vector<int> bfs_from(const Graph& g, int source) {
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::queue<int> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    const auto row = g.row0(u);
    for (int w = 0; w < g.words(); ++w) {
      std::uint64_t bits = row[static_cast<std::size_t>(w)];
      while (bits != 0) {
        const int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] =
              dist[static_cast<std::size_t>(u)] + 1;
          frontier.push(v);
        }
      }
    }
  }
  return dist;
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges)
    : n_(n), words_((n + 63) / 64) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidParameter,
                "graph needs at least one vertex, got " + std::to_string(n));
  }
  row_.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (const auto& [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw Error(ErrorCode::kInvalidVertex,
                  "self-loop at vertex " + std::to_string(u));
    }
    const int i = u - 1;
    const int j = v - 1;
    row_[static_cast<std::size_t>(i) * words_ + (j >> 6)] |=
        std::uint64_t{1} << (j & 63);
    row_[static_cast<std::size_t>(j) * words_ + (i >> 6)] |=
        std::uint64_t{1} << (i & 63);
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw Error(ErrorCode::kInvalidVertex,
                "vertex " + std::to_string(v) + " outside 1.." +
                    std::to_string(n_));
  }
}

std::size_t Graph::size() const noexcept {
  std::size_t twice = 0;
  for (auto word : row_) twice += static_cast<std::size_t>(std::popcount(word));
  return twice / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adj0(u - 1, v - 1);
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  int deg = 0;
  for (auto word : row0(v - 1)) deg += std::popcount(word);
  return deg;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (int j = 0; j < n_; ++j) {
    if (adj0(v - 1, j)) out.push_back(j + 1);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (adj0(i, j)) out.emplace_back(i + 1, j + 1);
    }
  }
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  for (Vertex v : vertices) check_vertex(v);
  const int k = static_cast<int>(vertices.size());
  std::vector<Edge> sub;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const Vertex u = vertices[static_cast<std::size_t>(a)];
      const Vertex v = vertices[static_cast<std::size_t>(b)];
      if (u == v) {
        throw Error(ErrorCode::kInvalidVertex,
                    "repeated vertex " + std::to_string(u));
      }
      if (adj0(u - 1, v - 1)) sub.emplace_back(a + 1, b + 1);
    }
  }
  return Graph(k, sub);
}

Graph Graph::relabeled(std::span<const Vertex> new_label) const {
  if (static_cast<int>(new_label.size()) != n_) {
    throw Error(ErrorCode::kInvalidParameter, "relabeling has wrong length");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  for (Vertex v : new_label) {
    check_vertex(v);
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw Error(ErrorCode::kInvalidParameter, "relabeling is not a bijection");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  std::vector<Edge> mapped;
  for (const auto& [u, v] : edges()) {
    mapped.emplace_back(new_label[static_cast<std::size_t>(u - 1)],
                        new_label[static_cast<std::size_t>(v - 1)]);
  }
  return Graph(n_, mapped);
}

int DistanceMatrix::max_entry() const noexcept {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

bool is_connected(const Graph& g) {
  const auto dist = bfs_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n) * n);
  for (int s = 0; s < n; ++s) {
    const auto dist = bfs_from(g, s);
    for (int t = 0; t < n; ++t) {
      if (dist[static_cast<std::size_t>(t)] < 0) {
        throw Error(ErrorCode::kDisconnectedGraph,
                    "no path between vertices " + std::to_string(s + 1) +
                        " and " + std::to_string(t + 1));
      }
    }
    entries.insert(entries.end(), dist.begin(), dist.end());
  }
  return DistanceMatrix(n, std::move(entries));
}

int diameter(const Graph& g) { return distance_matrix(g).max_entry(); }

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n - 1) / 2;
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  for (char c : text) {
    if (c < kGraph6Offset || c > 126) {
      throw Error(ErrorCode::kMalformedGraph6,
                  "byte " + std::to_string(static_cast<int>(
                                static_cast<unsigned char>(c))) +
                      " outside the printable range 63..126");
    }
  }
  if (text.empty()) throw Error(ErrorCode::kMalformedGraph6, "empty record");

  long n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = text[0] - kGraph6Offset;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) {
      throw Error(ErrorCode::kMalformedGraph6,
                  "8-byte size prefix (n > 258047) is not supported");
    }
    if (text.size() < 4) {
      throw Error(ErrorCode::kMalformedGraph6, "truncated size prefix");
    }
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (text[k] - kGraph6Offset);
    pos = 4;
  }
  if (n < 1) throw Error(ErrorCode::kMalformedGraph6, "zero-vertex graph");

  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bit_count + 5) / 6;
  if (text.size() - pos != expected) {
    throw Error(ErrorCode::kMalformedGraph6,
                "expected " + std::to_string(expected) +
                    " adjacency bytes for n=" + std::to_string(n) + ", got " +
                    std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i, ++bit) {
      const int group = text[pos + bit / 6] - kGraph6Offset;
      if ((group >> (5 - bit % 6)) & 1) {
        edges.emplace_back(static_cast<Vertex>(i + 1),
                           static_cast<Vertex>(j + 1));
      }
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6LongMax) {
    throw Error(ErrorCode::kTooLarge,
                "graph6 output supports n <= 258047, got " + std::to_string(n));
  }
  std::string out;
  if (n <= kGraph6ShortMax) {
    out.push_back(static_cast<char>(n + kGraph6Offset));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Offset));
    }
  }
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adj0(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kGraph6Offset));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((group << (6 - filled)) + kGraph6Offset));
  }
  return out;
}

namespace {

// Reads exactly `count` integers from a line; nullopt on any other content.
std::optional<std::vector<long>> line_ints(std::string_view line, int count) {
  std::istringstream in{std::string(line)};
  std::vector<long> out(static_cast<std::size_t>(count));
  for (auto& x : out) {
    if (!(in >> x)) return std::nullopt;
  }
  std::string rest;
  if (in >> rest) return std::nullopt;
  return out;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= text.size();) {
    const auto nl = std::min(text.find('\n', pos), text.size());
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  // a final newline does not open a new line
  if (lines.size() > 1 && lines.back().empty()) lines.pop_back();

  const auto header = line_ints(lines[0], 2);
  if (!header || (*header)[0] < 1 || (*header)[1] < 0) {
    throw Error(ErrorCode::kMalformedEdgeList,
                "first line must be \"n m\" with n >= 1, m >= 0", 1);
  }
  const long n = (*header)[0];
  const long m = (*header)[1];
  if (n > kGraph6LongMax) {
    throw Error(ErrorCode::kTooLarge, "edge list order " + std::to_string(n) + " too large", 1);
  }
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n)));
  for (long k = 0; k < m; ++k) {
    const auto line = static_cast<std::size_t>(k + 2);
    if (line > lines.size()) {
      throw Error(ErrorCode::kMalformedEdgeList,
                  "expected " + std::to_string(m) + " edges, found " +
                      std::to_string(k),
                  line);
    }
    const auto uv = line_ints(lines[line - 1], 2);
    if (!uv) {
      throw Error(ErrorCode::kMalformedEdgeList, "expected \"u v\"", line);
    }
    long u = (*uv)[0];
    long v = (*uv)[1];
    if (u < 1 || v < 1 || u > n || v > n || u == v) {
      throw Error(ErrorCode::kMalformedEdgeList,
                  "bad edge " + std::to_string(u) + " " + std::to_string(v),
                  line);
    }
    if (u > v) std::swap(u, v);
    if (seen[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)]) {
      throw Error(ErrorCode::kMalformedEdgeList,
                  "duplicate edge " + std::to_string(u) + " " + std::to_string(v),
                  line);
    }
    seen[static_cast<std::size_t>(u - 1)][static_cast<std::size_t>(v - 1)] = true;
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  for (std::size_t i = static_cast<std::size_t>(m) + 1; i < lines.size(); ++i) {
    if (!blank(lines[i])) {
      throw Error(ErrorCode::kMalformedEdgeList,
                  "trailing content after " + std::to_string(m) + " edges", i + 1);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  const auto edges = g.edges();
  std::string out =
      std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (const auto& [u, v] : edges) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

}  // namespace qec
