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

#include "hyperrecon/hypergraph.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hyperrecon/error.hpp"

namespace hyperrecon {

std::size_t NodeSetHash::operator()(const NodeSet& s) const noexcept {
  // 64-bit FNV-1a over the ids, mixed with the length.
  std::uint64_t h = 1469598103934665603ULL ^ s.size();
  for (NodeId v : s) {
    h ^= v;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

void canonicalize(NodeSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool is_subset(std::span<const NodeId> small, std::span<const NodeId> large) {
  if (small.size() > large.size()) return false;
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

namespace {

void check_members(const NodeSet& e, std::size_t node_count) {
  if (e.empty()) throw ValidationError("hyperedge is empty");
  if (e.back() >= node_count) {
    throw ValidationError("node id " + std::to_string(e.back()) +
                          " out of range for node_count " +
                          std::to_string(node_count));
  }
}

}  // namespace

Hypergraph::Hypergraph(std::size_t node_count, std::vector<NodeSet> hyperedges,
                       std::vector<std::int64_t> timestamps)
    : node_count_(node_count),
      hyperedges_(std::move(hyperedges)),
      timestamps_(std::move(timestamps)) {
  if (!timestamps_.empty() && timestamps_.size() != hyperedges_.size()) {
    throw ValidationError("timestamp count does not match hyperedge count");
  }
  for (auto& e : hyperedges_) {
    canonicalize(e);
    check_members(e, node_count_);
  }
  build_indexes();
  if (index_.size() != hyperedges_.size()) {
    throw ValidationError("hyperedges are not pairwise distinct");
  }
}

Hypergraph Hypergraph::deduplicated(std::size_t node_count,
                                    std::vector<NodeSet> hyperedges,
                                    std::vector<std::int64_t> timestamps,
                                    std::size_t* dropped) {
  if (!timestamps.empty() && timestamps.size() != hyperedges.size()) {
    throw ValidationError("timestamp count does not match hyperedge count");
  }
  std::unordered_map<NodeSet, bool, NodeSetHash> seen;
  std::vector<NodeSet> kept;
  std::vector<std::int64_t> kept_times;
  kept.reserve(hyperedges.size());
  for (std::size_t i = 0; i < hyperedges.size(); ++i) {
    canonicalize(hyperedges[i]);
    if (!seen.emplace(hyperedges[i], true).second) continue;
    kept.push_back(std::move(hyperedges[i]));
    if (!timestamps.empty()) kept_times.push_back(timestamps[i]);
  }
  if (dropped != nullptr) *dropped = hyperedges.size() - kept.size();
  return Hypergraph(node_count, std::move(kept), std::move(kept_times));
}

void Hypergraph::build_indexes() {
  incidence_.assign(node_count_, {});
  index_.clear();
  index_.reserve(hyperedges_.size());
  for (std::uint32_t i = 0; i < hyperedges_.size(); ++i) {
    index_.emplace(hyperedges_[i], i);
    for (NodeId v : hyperedges_[i]) incidence_[v].push_back(i);
  }
}

std::optional<std::size_t> Hypergraph::find(const NodeSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace hyperrecon
