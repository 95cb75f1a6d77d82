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

#include "hyperrecon/cliques.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "hyperrecon/error.hpp"

namespace hyperrecon {

using Adjacency = std::vector<std::vector<NodeId>>;

std::size_t CliqueSet::count_of_size(std::size_t n) const {
  auto it = by_size.find(n);
  return it == by_size.end() ? 0 : it->second.size();
}

CliqueSet CliqueSet::from(std::vector<NodeSet> cliques) {
  CliqueSet out;
  for (auto& c : cliques) canonicalize(c);
  std::sort(cliques.begin(), cliques.end());
  cliques.erase(std::unique(cliques.begin(), cliques.end()), cliques.end());
  out.cliques = std::move(cliques);
  for (std::size_t i = 0; i < out.cliques.size(); ++i) {
    out.by_size[out.cliques[i].size()].push_back(i);
  }
  return out;
}

std::vector<NodeId> degeneracy_order(const Adjacency& adjacency) {
  const std::size_t n = adjacency.size();
  std::vector<std::size_t> deg(n);
  std::size_t max_deg = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = adjacency[v].size();
    max_deg = std::max(max_deg, deg[v]);
  }
  // Ordered buckets keep the tie-break by id deterministic.
  std::vector<std::set<NodeId>> buckets(max_deg + 1);
  for (NodeId v = 0; v < n; ++v) buckets[deg[v]].insert(v);
  std::vector<char> removed(n, 0);
  std::vector<NodeId> order;
  order.reserve(n);
  std::size_t low = 0;
  for (std::size_t step = 0; step < n; ++step) {
    low = low > 0 ? low - 1 : 0;
    while (buckets[low].empty()) ++low;
    NodeId v = *buckets[low].begin();
    buckets[low].erase(buckets[low].begin());
    removed[v] = 1;
    order.push_back(v);
    for (NodeId w : adjacency[v]) {
      if (removed[w]) continue;
      buckets[deg[w]].erase(w);
      --deg[w];
      buckets[deg[w]].insert(w);
    }
  }
  return order;
}

namespace {

std::vector<NodeId> intersect(std::span<const NodeId> a,
                              std::span<const NodeId> b) {
  std::vector<NodeId> out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::size_t intersection_size(std::span<const NodeId> a,
                              std::span<const NodeId> b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// Tomita-style pivoting Bron-Kerbosch. P and X are sorted.
class PivotEnumerator {
 public:
  PivotEnumerator(const Adjacency& adjacency, std::size_t cap,
                  std::vector<NodeSet>& out)
      : adjacency_(adjacency), cap_(cap), out_(out) {}

  void expand(NodeSet& r, std::vector<NodeId> p, std::vector<NodeId> x) {
    if (p.empty()) {
      if (x.empty()) emit(r);
      return;
    }
    NodeId pivot = p.front();
    std::size_t best = 0;
    bool first = true;
    for (const auto* set : {&p, &x}) {
      for (NodeId u : *set) {
        std::size_t c = intersection_size(p, adjacency_[u]);
        if (first || c > best) {
          best = c;
          pivot = u;
          first = false;
        }
      }
    }
    std::vector<NodeId> branch;
    std::set_difference(p.begin(), p.end(), adjacency_[pivot].begin(),
                        adjacency_[pivot].end(), std::back_inserter(branch));
    for (NodeId v : branch) {
      const auto& nv = adjacency_[v];
      r.push_back(v);
      expand(r, intersect(p, nv), intersect(x, nv));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

 private:
  void emit(const NodeSet& r) {
    if (out_.size() >= cap_) throw CliqueOverflowError(cap_);
    NodeSet c = r;
    std::sort(c.begin(), c.end());
    out_.push_back(std::move(c));
  }

  const Adjacency& adjacency_;
  std::size_t cap_;
  std::vector<NodeSet>& out_;
};

}  // namespace

std::vector<NodeSet> maximal_cliques(const Adjacency& adjacency,
                                     std::size_t cap) {
  const std::size_t n = adjacency.size();
  std::vector<NodeSet> out;
  auto order = degeneracy_order(adjacency);
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  PivotEnumerator enumerator(adjacency, cap, out);
  NodeSet r;
  for (NodeId v : order) {
    std::vector<NodeId> p;
    std::vector<NodeId> x;
    for (NodeId w : adjacency[v]) {
      (position[w] > position[v] ? p : x).push_back(w);
    }
    r.assign(1, v);
    enumerator.expand(r, std::move(p), std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CliqueSet maximal_cliques(const ProjectedGraph& g, std::size_t cap) {
  return CliqueSet::from(maximal_cliques(g.adjacency_lists(), cap));
}

std::vector<NodeSet> maximal_cliques_containing(const Adjacency& adjacency,
                                                NodeId v) {
  std::vector<NodeSet> out;
  PivotEnumerator enumerator(adjacency, kDefaultCliqueCap, out);
  NodeSet r{v};
  enumerator.expand(r, adjacency[v], {});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Counts cliques whose lowest-ranked node is a member of `candidates` and
// that extend the current partial clique; adjacency is in rank space.
bool count_extensions(const Adjacency& ranked, std::span<const NodeId> candidates,
                      std::uint64_t cap, std::uint64_t& total) {
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (++total > cap) return false;
    NodeId u = candidates[i];
    auto rest = candidates.subspan(i + 1);
    auto next = intersect(rest, ranked[u]);
    if (!next.empty() && !count_extensions(ranked, next, cap, total)) {
      return false;
    }
  }
  return true;
}

}  // namespace

CliqueCount count_all_cliques(const ProjectedGraph& g, std::uint64_t cap) {
  const auto adjacency = g.adjacency_lists();
  const std::size_t n = adjacency.size();
  auto order = degeneracy_order(adjacency);
  std::vector<NodeId> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<NodeId>(i);
  // Relabel by rank and keep only higher-ranked neighbors: each clique is
  // then counted once, from its lowest-ranked member.
  Adjacency forward(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (NodeId w : adjacency[v]) {
      if (rank[w] > rank[v]) forward[rank[v]].push_back(rank[w]);
    }
    std::sort(forward[rank[v]].begin(), forward[rank[v]].end());
  }
  CliqueCount result;
  std::uint64_t total = 0;
  bool ok = true;
  for (NodeId v = 0; v < n && ok; ++v) {
    if (++total > cap) {
      ok = false;
      break;
    }
    ok = count_extensions(forward, forward[v], cap, total);
  }
  if (ok) {
    result.count = total;
    return result;
  }
  result.overflow = true;
  auto maximal = maximal_cliques(adjacency);
  std::stable_sort(maximal.begin(), maximal.end(),
                   [](const NodeSet& a, const NodeSet& b) {
                     return a.size() > b.size();
                   });
  std::vector<char> used(n, 0);
  for (const auto& c : maximal) {
    if (std::any_of(c.begin(), c.end(), [&](NodeId v) { return used[v] != 0; })) {
      continue;
    }
    for (NodeId v : c) used[v] = 1;
    result.lower_bound += std::exp2(static_cast<double>(c.size())) - 1.0;
  }
  return result;
}

}  // namespace hyperrecon
