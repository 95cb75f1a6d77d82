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

#include "hyperrecon/structure.hpp"

#include <algorithm>
#include <span>

#include "hyperrecon/cliques.hpp"
#include "hyperrecon/graph.hpp"

namespace hyperrecon {

namespace {

// The member of `s` with the fewest incident hyperedges.
NodeId rarest_member(const Hypergraph& h, const NodeSet& s) {
  return *std::min_element(s.begin(), s.end(), [&](NodeId a, NodeId b) {
    return h.degree(a) < h.degree(b);
  });
}

bool has_superset(const Hypergraph& h, const NodeSet& s) {
  if (s.empty()) return !h.empty();
  for (auto j : h.incident(rarest_member(h, s))) {
    if (is_subset(s, h[j])) return true;
  }
  return false;
}

}  // namespace

std::vector<bool> nested_hyperedges(const Hypergraph& h) {
  std::vector<bool> nested(h.size(), false);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& e = h[i];
    for (auto j : h.incident(rarest_member(h, e))) {
      if (h[j].size() > e.size() && is_subset(e, h[j])) {
        nested[i] = true;
        break;
      }
    }
  }
  return nested;
}

bool is_sperner(const Hypergraph& h) {
  auto nested = nested_hyperedges(h);
  return std::none_of(nested.begin(), nested.end(), [](bool b) { return b; });
}

bool is_conformal(const Hypergraph& h) {
  const auto cliques = maximal_cliques(project(h));
  for (const auto& c : cliques.cliques) {
    if (c.size() == 1 && h.degree(c.front()) == 0) continue;
    if (!h.contains(c)) return false;
  }
  return true;
}

bool is_conformal_triangle(const Hypergraph& h) {
  // Triples that repeat a hyperedge reduce to that hyperedge itself, which
  // is trivially covered; only distinct triples need checking.
  const auto& edges = h.hyperedges();
  const std::size_t m = edges.size();
  NodeSet ij;
  NodeSet jq;
  NodeSet qi;
  NodeSet u;
  NodeSet tmp;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      ij.clear();
      std::set_intersection(edges[i].begin(), edges[i].end(), edges[j].begin(),
                            edges[j].end(), std::back_inserter(ij));
      for (std::size_t q = j + 1; q < m; ++q) {
        jq.clear();
        qi.clear();
        std::set_intersection(edges[j].begin(), edges[j].end(),
                              edges[q].begin(), edges[q].end(),
                              std::back_inserter(jq));
        std::set_intersection(edges[q].begin(), edges[q].end(),
                              edges[i].begin(), edges[i].end(),
                              std::back_inserter(qi));
        tmp.clear();
        std::set_union(ij.begin(), ij.end(), jq.begin(), jq.end(),
                       std::back_inserter(tmp));
        u.clear();
        std::set_union(tmp.begin(), tmp.end(), qi.begin(), qi.end(),
                       std::back_inserter(u));
        if (!has_superset(h, u)) return false;
      }
    }
  }
  return true;
}

}  // namespace hyperrecon
