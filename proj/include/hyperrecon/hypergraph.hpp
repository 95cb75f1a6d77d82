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

#ifndef HYPERRECON_HYPERGRAPH_HPP_
#define HYPERRECON_HYPERGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace hyperrecon {

using NodeId = std::uint32_t;

// A sorted, duplicate-free list of node ids.
using NodeSet = std::vector<NodeId>;

struct NodeSetHash {
  std::size_t operator()(const NodeSet& s) const noexcept;
};

// Sorts and deduplicates `s` in place.
void canonicalize(NodeSet& s);

// True if sorted `small` is a subset of sorted `large`.
bool is_subset(std::span<const NodeId> small, std::span<const NodeId> large);

// Node universe [0, node_count) plus a family of distinct, non-empty
// hyperedges. Immutable after construction.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Hyperedges are canonicalized. Throws ValidationError on an empty
  // hyperedge, an id >= node_count, a duplicate hyperedge, or a timestamp
  // vector whose length differs from the hyperedge count.
  Hypergraph(std::size_t node_count, std::vector<NodeSet> hyperedges,
             std::vector<std::int64_t> timestamps = {});

  // Same as the constructor but drops repeated hyperedges (first occurrence
  // wins) instead of throwing. `dropped` receives the number removed.
  static Hypergraph deduplicated(std::size_t node_count,
                                 std::vector<NodeSet> hyperedges,
                                 std::vector<std::int64_t> timestamps = {},
                                 std::size_t* dropped = nullptr);

  std::size_t node_count() const { return node_count_; }
  std::size_t size() const { return hyperedges_.size(); }
  bool empty() const { return hyperedges_.empty(); }

  const std::vector<NodeSet>& hyperedges() const { return hyperedges_; }
  const NodeSet& operator[](std::size_t i) const { return hyperedges_[i]; }

  bool has_timestamps() const { return !timestamps_.empty(); }
  const std::vector<std::int64_t>& timestamps() const { return timestamps_; }

  // Indices of the hyperedges containing `v`, ascending.
  std::span<const std::uint32_t> incident(NodeId v) const {
    return incidence_[v];
  }
  std::size_t degree(NodeId v) const { return incidence_[v].size(); }

  std::optional<std::size_t> find(const NodeSet& s) const;
  bool contains(const NodeSet& s) const { return find(s).has_value(); }

 private:
  void build_indexes();

  std::size_t node_count_ = 0;
  std::vector<NodeSet> hyperedges_;
  std::vector<std::int64_t> timestamps_;
  std::vector<std::vector<std::uint32_t>> incidence_;
  std::unordered_map<NodeSet, std::uint32_t, NodeSetHash> index_;
};

}  // namespace hyperrecon

#endif  // HYPERRECON_HYPERGRAPH_HPP_
