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

#ifndef QEC_FAMILIES_HPP_
#define QEC_FAMILIES_HPP_

#include <string>
#include <string_view>

#include "qec/graph.hpp"

namespace qec {

Graph path(int n);                          // n >= 1
Graph cycle(int n);                         // n >= 3
Graph complete(int n);                      // n >= 1
Graph complete_bipartite(int m, int n);     // parts {1..m}, {m+1..m+n}

// Joins g1 and g2 at root1 ~ root2. g1 keeps its labels, so the joint vertex
// is root1; the remaining vertices of g2 follow as n1 + 1, n1 + 2, ... in
// their original order. Both inputs must be connected.
Graph star_product(const Graph& g1, Vertex root1, const Graph& g2, Vertex root2);

// K_n star K_m joined at vertex n of K_n: K_n on {1..n}, K_m on {n..n+m-1}.
Graph star_product_complete(int n, int m);

// K_n on {1..n} with pendant edges {i, n+i} for i <= m. Vertex order is
// bearded bases, bare bases, tips, so the distance matrix has the block form
//   [ J-I   J    2J-I ]
//   [ J     J-I  2J   ]
//   [ 2J-I  2J   3J-3I ].
Graph bearded_complete(int n, int m);

Graph diamond();  // K4 minus {3,4}
Graph claw();     // K_{1,3}, centre 1

// Command-line family mini-language:
//   P:n  C:n  K:n  Kb:m,n  KsK:n,m  BK:n,m  SP:<g6>@<v>,<g6>@<v>
struct FamilySpec {
  enum class Kind {
    kPath,
    kCycle,
    kComplete,
    kCompleteBipartite,
    kStarProductKK,
    kBeardedComplete,
    kStarProductGeneral,
  };
  Kind kind;
  int a = 0;
  int b = 0;
  std::string graph6_1;
  Vertex root1 = 0;
  std::string graph6_2;
  Vertex root2 = 0;
};

// Throws kInvalidParameter on syntax errors or out-of-range parameters.
FamilySpec parse_family_spec(std::string_view text);
Graph build(const FamilySpec& spec);
std::string to_string(const FamilySpec& spec);

}  // namespace qec

#endif  // QEC_FAMILIES_HPP_
