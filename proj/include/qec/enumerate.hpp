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

// Brute-force generation of connected graphs up to isomorphism, and graph6
// corpus ingestion for anything larger.

#ifndef QEC_ENUMERATE_HPP_
#define QEC_ENUMERATE_HPP_

#include <compare>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "qec/graph.hpp"

namespace qec {

inline constexpr int kMaxCanonicalOrder = 9;
inline constexpr int kMaxEnumerationOrder = 7;

// Upper-triangle adjacency bits in graph6 column order, first pair (1,2) in
// the most significant of the n(n-1)/2 used bits. Minimized over all
// relabelings that list vertices by increasing refined-degree colour, so two
// graphs share a form iff they are isomorphic.
struct CanonicalForm {
  int n = 0;
  std::uint64_t bits = 0;
  auto operator<=>(const CanonicalForm&) const = default;
};

// Throws kTooLargeForCanonical for n > 9.
CanonicalForm canonical_form(const Graph& g);
// The graph whose upper triangle is `form.bits`.
Graph to_graph(const CanonicalForm& form);

enum class IterationOrder { kAscending, kDescending };

// One representative per isomorphism class of connected graphs on n vertices
// (the canonically labelled one), sorted by canonical form. Edge subsets are
// split into `shards` contiguous ranges processed concurrently. Throws
// kTooLargeForEnumeration for n > 7.
std::vector<Graph> enumerate_connected(int n, int shards = 1,
                                       IterationOrder order = IterationOrder::kAscending);

// Concatenation of enumerate_connected(k) for min_n <= k <= max_n.
std::vector<Graph> enumerate_connected_range(int min_n, int max_n, int shards = 1);

// Newline-separated graph6 records; blank lines and a ">>graph6<<" header are
// skipped. Throws kIoError, or kMalformedGraph6 carrying the 1-based line.
std::vector<Graph> read_graph6(std::istream& in);
std::vector<Graph> ingest_graph6(const std::filesystem::path& path);
void for_each_graph6(std::istream& in, const std::function<void(Graph)>& sink);

void write_graph6_file(const std::filesystem::path& path, std::span<const Graph> graphs);

}  // namespace qec

#endif  // QEC_ENUMERATE_HPP_
