// Copyright 2026 The Authors.
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

#ifndef HYPERRECON_CLIQUES_HPP_
#define HYPERRECON_CLIQUES_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "hyperrecon/graph.hpp"
#include "hyperrecon/hypergraph.hpp"

namespace hyperrecon {

inline constexpr std::size_t kDefaultCliqueCap = 10'000'000;

// A family of cliques with a by-size index. Cliques are kept in
// lexicographic order so equal inputs always give equal sets.
struct CliqueSet {
  std::vector<NodeSet> cliques;
  // size -> positions in `cliques`, ascending.
  std::map<std::size_t, std::vector<std::size_t>> by_size;

  std::size_t size() const { return cliques.size(); }
  std::size_t max_clique_size() const {
    return by_size.empty() ? 0 : by_size.rbegin()->first;
  }
  // Number of cliques of exactly `n` nodes.
  std::size_t count_of_size(std::size_t n) const;

  static CliqueSet from(std::vector<NodeSet> cliques);
};

// All inclusion-maximal cliques of `g`, isolated nodes included as
// singletons. Throws CliqueOverflowError once more than `cap` are found.
CliqueSet maximal_cliques(const ProjectedGraph& g,
                          std::size_t cap = kDefaultCliqueCap);

// Same enumeration over raw sorted adjacency lists.
std::vector<NodeSet> maximal_cliques(
    const std::vector<std::vector<NodeId>>& adjacency,
    std::size_t cap = kDefaultCliqueCap);

// Maximal cliques that contain `v`, sorted lexicographically.
std::vector<NodeSet> maximal_cliques_containing(
    const std::vector<std::vector<NodeId>>& adjacency, NodeId v);

struct CliqueCount {
  bool overflow = false;
  // Exact number of non-empty cliques when !overflow.
  std::uint64_t count = 0;
  // On overflow: sum of 2^|C| - 1 over a family of pairwise disjoint
  // maximal cliques, which is a lower bound on the true count.
  double lower_bound = 0.0;
};

// Number of non-empty cliques (every node, edge, triangle, ...).
CliqueCount count_all_cliques(const ProjectedGraph& g, std::uint64_t cap);

// Nodes in smallest-last (degeneracy) order, ties broken by node id.
std::vector<NodeId> degeneracy_order(
    const std::vector<std::vector<NodeId>>& adjacency);

}  // namespace hyperrecon

#endif  // HYPERRECON_CLIQUES_HPP_
