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

#include "hyperrecon/graph.hpp"

#include <algorithm>
#include <string>

#include "hyperrecon/error.hpp"

namespace hyperrecon {

ProjectedGraph::ProjectedGraph(
    std::size_t node_count, std::vector<Edge> edges,
    std::optional<std::vector<std::uint32_t>> multiplicity)
    : node_count_(node_count), weighted_(multiplicity.has_value()) {
  if (multiplicity && multiplicity->size() != edges.size()) {
    throw ValidationError("multiplicity count does not match edge count");
  }
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& [u, v] = edges[i];
    if (u == v) {
      throw ValidationError("self-loop on node " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    if (v >= node_count_) {
      throw ValidationError("node id " + std::to_string(v) +
                            " out of range for node_count " +
                            std::to_string(node_count_));
    }
    if (multiplicity && (*multiplicity)[i] == 0) {
      throw ValidationError("edge multiplicity must be positive");
    }
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t i : order) {
    if (!edges_.empty() && edges_.back() == edges[i]) {
      if (multiplicity) multiplicity_.back() += (*multiplicity)[i];
      continue;
    }
    edges_.push_back(edges[i]);
    if (multiplicity) multiplicity_.push_back((*multiplicity)[i]);
  }

  // Edges are sorted by (u, v). Appending v to u's row in that order and u
  // to v's row in the same order keeps every row sorted: all lower
  // neighbors of a node are appended before any of its higher neighbors.
  std::vector<std::vector<std::pair<NodeId, std::uint32_t>>> rows(node_count_);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const auto& [u, v] = edges_[i];
    rows[v].emplace_back(u, i);
  }
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const auto& [u, v] = edges_[i];
    rows[u].emplace_back(v, i);
  }
  offsets_.assign(node_count_ + 1, 0);
  for (std::size_t v = 0; v < node_count_; ++v) {
    offsets_[v + 1] = offsets_[v] + rows[v].size();
  }
  adjacency_.reserve(offsets_.back());
  slot_edge_.reserve(offsets_.back());
  for (const auto& row : rows) {
    for (const auto& [w, id] : row) {
      adjacency_.push_back(w);
      slot_edge_.push_back(id);
    }
  }
}

std::optional<std::size_t> ProjectedGraph::edge_index(NodeId u, NodeId v) const {
  if (u >= node_count_ || v >= node_count_ || u == v) return std::nullopt;
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return slot_edge_[offsets_[u] + static_cast<std::size_t>(it - nb.begin())];
}

std::uint32_t ProjectedGraph::multiplicity(NodeId u, NodeId v) const {
  if (multiplicity_.empty()) return 0;
  auto idx = edge_index(u, v);
  return idx ? multiplicity_[*idx] : 0;
}

std::vector<std::vector<NodeId>> ProjectedGraph::adjacency_lists() const {
  std::vector<std::vector<NodeId>> out(node_count_);
  for (NodeId v = 0; v < node_count_; ++v) {
    auto nb = neighbors(v);
    out[v].assign(nb.begin(), nb.end());
  }
  return out;
}

ProjectedGraph project(const Hypergraph& h, bool with_multiplicity) {
  std::vector<Edge> pairs;
  std::size_t total = 0;
  for (const auto& e : h.hyperedges()) total += e.size() * (e.size() - 1) / 2;
  pairs.reserve(total);
  for (const auto& e : h.hyperedges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t j = i + 1; j < e.size(); ++j) pairs.emplace_back(e[i], e[j]);
    }
  }
  if (!with_multiplicity) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return ProjectedGraph(h.node_count(), std::move(pairs));
  }
  std::vector<std::uint32_t> ones(pairs.size(), 1);
  return ProjectedGraph(h.node_count(), std::move(pairs), std::move(ones));
}

}  // namespace hyperrecon
