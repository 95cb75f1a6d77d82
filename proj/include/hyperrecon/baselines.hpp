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

#ifndef HYPERRECON_BASELINES_HPP_
#define HYPERRECON_BASELINES_HPP_

#include <cstdint>
#include <vector>

#include "hyperrecon/cliques.hpp"
#include "hyperrecon/graph.hpp"
#include "hyperrecon/hypergraph.hpp"

namespace hyperrecon {

// Every maximal clique as a hyperedge.
std::vector<NodeSet> baseline_max_clique(const ProjectedGraph& g,
                                         std::size_t cap = kDefaultCliqueCap);

// Greedy edge clique cover: take the next uncovered edge, grow it into a
// maximal clique by repeatedly adding the common neighbor that covers the
// most uncovered edges (lowest id on ties). Edges are visited in sorted
// order for seed 0 and in a seed-shuffled order otherwise. Isolated nodes
// come out as singletons. Sorted output.
std::vector<NodeSet> baseline_clique_cover(const ProjectedGraph& g, std::uint64_t seed = 0);

// Peels maximal cliques off a multigraph: repeatedly emit the maximal clique
// of the remaining graph with the largest size - weight * mean edge
// multiplicity (lexicographically smallest on ties) and decrement its
// edges. Returns a multiset in emission order; nodes isolated in the input
// are emitted once as singletons at the end. Requires multiplicities.
std::vector<NodeSet> baseline_multiplicity(const ProjectedGraph& g, double weight = 1.0);

}  // namespace hyperrecon

#endif  // HYPERRECON_BASELINES_HPP_
