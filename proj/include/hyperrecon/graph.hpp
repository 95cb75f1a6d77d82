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

#ifndef HYPERRECON_GRAPH_HPP_
#define HYPERRECON_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hyperrecon/hypergraph.hpp"

namespace hyperrecon {

// Unordered node pair stored with first < second.
using Edge = std::pair<NodeId, NodeId>;

// Simple undirected graph with an optional per-edge multiplicity.
// Adjacency is stored in CSR form with sorted neighbor lists.
class ProjectedGraph {
 public:
  ProjectedGraph() = default;

  // Edges may be given in either orientation; duplicates are merged.
  // Throws ValidationError on self-loops, out-of-range ids, a multiplicity
  // vector whose length differs from `edges`, or a zero multiplicity.
  // When duplicates are merged their multiplicities are summed.
  ProjectedGraph(std::size_t node_count, std::vector<Edge> edges,
                 std::optional<std::vector<std::uint32_t>> multiplicity = {});

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  // Sorted (u < v) edge list; index i matches multiplicities()[i].
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(NodeId u, NodeId v) const { return edge_index(u, v).has_value(); }
  std::optional<std::size_t> edge_index(NodeId u, NodeId v) const;

  bool has_multiplicity() const { return weighted_; }
  const std::vector<std::uint32_t>& multiplicities() const { return multiplicity_; }
  // 0 when the edge is absent or no multiplicity is stored.
  std::uint32_t multiplicity(NodeId u, NodeId v) const;

  // Copy of the neighbor lists as vectors.
  std::vector<std::vector<NodeId>> adjacency_lists() const;

 private:
  std::size_t node_count_ = 0;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> multiplicity_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<std::uint32_t> slot_edge_;
};

// Clique expansion of `h`. With `with_multiplicity`, each edge carries the
// number of hyperedges containing both endpoints.
ProjectedGraph project(const Hypergraph& h, bool with_multiplicity = false);

}  // namespace hyperrecon

#endif  // HYPERRECON_GRAPH_HPP_
