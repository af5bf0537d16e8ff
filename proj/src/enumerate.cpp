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

#include "qec/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <istream>
#include <set>
#include <string>

#include "qec/error.hpp"
#include "qec/parallel.hpp"

namespace qec {
namespace {

// Adjacency of a graph on at most kMaxCanonicalOrder vertices, one mask per row.
struct SmallGraph {
  int n = 0;
  std::array<std::uint32_t, kMaxCanonicalOrder> row{};
};

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Index of pair (i, j), i < j, in graph6 column order.
constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

SmallGraph from_subset(int n, std::uint64_t subset) {
  SmallGraph g;
  g.n = n;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((subset >> k) & 1u) {
        g.row[static_cast<std::size_t>(i)] |= 1u << j;
        g.row[static_cast<std::size_t>(j)] |= 1u << i;
      }
    }
  }
  return g;
}

bool small_connected(const SmallGraph& g) {
  const std::uint32_t all = (g.n == 32) ? ~0u : ((1u << g.n) - 1u);
  std::uint32_t seen = 1u;
  std::uint32_t frontier = 1u;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
      next |= g.row[static_cast<std::size_t>(std::countr_zero(f))];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

// Colour refinement started from degrees. Colours are ranks of sorted
// (colour, neighbour colour multiset) signatures, so they depend only on the
// isomorphism type of each vertex's surroundings, never on labels.
std::array<int, kMaxCanonicalOrder> refine_colours(const SmallGraph& g) {
  std::array<int, kMaxCanonicalOrder> colour{};
  for (int v = 0; v < g.n; ++v) {
    colour[static_cast<std::size_t>(v)] = std::popcount(g.row[static_cast<std::size_t>(v)]);
  }
  int classes = 0;
  while (true) {
    std::array<std::array<int, kMaxCanonicalOrder + 1>, kMaxCanonicalOrder> sig{};
    for (int v = 0; v < g.n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.fill(-1);
      s[0] = colour[static_cast<std::size_t>(v)];
      int k = 1;
      for (std::uint32_t r = g.row[static_cast<std::size_t>(v)]; r != 0; r &= r - 1) {
        s[static_cast<std::size_t>(k++)] = colour[static_cast<std::size_t>(std::countr_zero(r))];
      }
      std::sort(s.begin() + 1, s.begin() + k);
    }
    std::array<std::array<int, kMaxCanonicalOrder + 1>, kMaxCanonicalOrder> sorted = sig;
    std::sort(sorted.begin(), sorted.begin() + g.n);
    const auto end = std::unique(sorted.begin(), sorted.begin() + g.n);
    const int now = static_cast<int>(end - sorted.begin());
    for (int v = 0; v < g.n; ++v) {
      colour[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(sorted.begin(), end, sig[static_cast<std::size_t>(v)]) - sorted.begin());
    }
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

// Branch-and-bound over colour-respecting orderings: position p may only hold
// a vertex whose colour is the p-th smallest. Column p contributes p bits.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SmallGraph& g) : g_(g), total_bits_(pair_count(g.n)) {
    colour_ = refine_colours(g);
    for (int v = 0; v < g.n; ++v) target_[static_cast<std::size_t>(v)] = colour_[static_cast<std::size_t>(v)];
    std::sort(target_.begin(), target_.begin() + g.n);
  }

  std::uint64_t run() {
    if (g_.n <= 1) return 0;
    descend(0, 0, 0, 0);
    return best_;
  }

 private:
  void descend(int depth, std::uint32_t used, std::uint64_t prefix, int prefix_bits) {
    if (depth == g_.n) {
      if (!have_best_ || prefix < best_) {
        best_ = prefix;
        have_best_ = true;
      }
      return;
    }
    const int want = target_[static_cast<std::size_t>(depth)];
    for (int v = 0; v < g_.n; ++v) {
      if ((used >> v) & 1u || colour_[static_cast<std::size_t>(v)] != want) continue;
      std::uint64_t next = prefix;
      for (int a = 0; a < depth; ++a) {
        next = (next << 1) | ((g_.row[static_cast<std::size_t>(order_[static_cast<std::size_t>(a)])] >> v) & 1u);
      }
      const int bits = prefix_bits + depth;
      if (have_best_ && next > (best_ >> (total_bits_ - bits))) continue;
      order_[static_cast<std::size_t>(depth)] = v;
      descend(depth + 1, used | (1u << v), next, bits);
    }
  }

  const SmallGraph& g_;
  int total_bits_;
  std::array<int, kMaxCanonicalOrder> colour_{};
  std::array<int, kMaxCanonicalOrder> target_{};
  std::array<int, kMaxCanonicalOrder> order_{};
  std::uint64_t best_ = 0;
  bool have_best_ = false;
};

std::uint64_t canonical_bits(const SmallGraph& g) { return CanonicalSearch(g).run(); }

std::set<std::uint64_t> enumerate_shard(int n, std::uint64_t begin, std::uint64_t end,
                                        IterationOrder order) {
  std::set<std::uint64_t> forms;
  const std::uint64_t count = end - begin;
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t subset =
        order == IterationOrder::kAscending ? begin + k : end - 1 - k;
    if (std::popcount(subset) < n - 1) continue;
    const SmallGraph g = from_subset(n, subset);
    if (!small_connected(g)) continue;
    forms.insert(canonical_bits(g));
  }
  return forms;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) {
    throw Error(ErrorCode::kTooLargeForCanonical,
                "canonical forms are limited to n <= 9, got " + std::to_string(n));
  }
  SmallGraph s;
  s.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.adj0(i, j)) s.row[static_cast<std::size_t>(i)] |= 1u << j;
    }
  }
  return {n, canonical_bits(s)};
}

Graph to_graph(const CanonicalForm& form) {
  const int m = pair_count(form.n);
  std::vector<Edge> edges;
  for (int j = 1; j < form.n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((form.bits >> (m - 1 - pair_index(i, j))) & 1u) edges.emplace_back(i + 1, j + 1);
    }
  }
  return Graph(form.n, edges);
}

std::vector<Graph> enumerate_connected(int n, int shards, IterationOrder order) {
  if (n < 1) throw Error(ErrorCode::kInvalidParameter, "enumeration needs n >= 1");
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::kTooLargeForEnumeration,
                "enumeration is limited to n <= 7; ingest a graph6 corpus from an "
                "external generator for n=" + std::to_string(n));
  }
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  shards = std::max(shards, 1);
  std::vector<std::set<std::uint64_t>> partial(static_cast<std::size_t>(shards));
  run_shards(shards, [&](int s) {
    const auto [begin, end] = shard_range(total, s, shards);
    partial[static_cast<std::size_t>(s)] = enumerate_shard(n, begin, end, order);
  });
  std::set<std::uint64_t> merged;
  for (auto& p : partial) merged.merge(p);
  std::vector<Graph> out;
  out.reserve(merged.size());
  for (std::uint64_t bits : merged) out.push_back(to_graph({n, bits}));
  return out;
}

std::vector<Graph> enumerate_connected_range(int min_n, int max_n, int shards) {
  std::vector<Graph> out;
  for (int n = min_n; n <= max_n; ++n) {
    auto part = enumerate_connected(n, shards);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

void for_each_graph6(std::istream& in, const std::function<void(Graph)>& sink) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line == ">>graph6<<") continue;
    try {
      sink(parse_graph6(line));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kMalformedGraph6) throw;
      throw Error(ErrorCode::kMalformedGraph6,
                  "line " + std::to_string(line_no) + ": " + e.message(), line_no);
    }
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failure");
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  for_each_graph6(in, [&](Graph g) { out.push_back(std::move(g)); });
  return out;
}

std::vector<Graph> ingest_graph6(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return read_graph6(in);
}

void write_graph6_file(const std::filesystem::path& path, std::span<const Graph> graphs) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  for (const auto& g : graphs) out << write_graph6(g) << '\n';
  if (!out) throw Error(ErrorCode::kIoError, "write failure on " + path.string());
}

}  // namespace qec
