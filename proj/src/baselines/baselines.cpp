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

#include "hyperrecon/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "hyperrecon/error.hpp"
#include "hyperrecon/random.hpp"

namespace hyperrecon {

std::vector<NodeSet> baseline_max_clique(const ProjectedGraph& g, std::size_t cap) {
  return maximal_cliques(g, cap).cliques;
}

std::vector<NodeSet> baseline_clique_cover(const ProjectedGraph& g, std::uint64_t seed) {
  const auto& edges = g.edges();
  std::vector<bool> covered(edges.size(), false);
  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  if (seed != 0) {
    Rng rng(derive_seed(seed, {0xC0FE}));
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[uniform_below(rng, i)]);
    }
  }

  std::vector<NodeSet> out;
  NodeSet clique, pool, next;
  for (auto e : order) {
    if (covered[e]) continue;
    auto [u, v] = edges[e];
    clique = {u, v};
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    pool.clear();
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(pool));
    while (!pool.empty()) {
      NodeId best = pool[0];
      std::size_t best_gain = 0;
      bool first = true;
      for (NodeId w : pool) {
        std::size_t gain = 0;
        for (NodeId c : clique) gain += !covered[*g.edge_index(c, w)];
        if (first || gain > best_gain) {
          best = w;
          best_gain = gain;
          first = false;
        }
      }
      clique.push_back(best);
      auto nb = g.neighbors(best);
      next.clear();
      std::set_intersection(pool.begin(), pool.end(), nb.begin(), nb.end(), std::back_inserter(next));
      pool.swap(next);
    }
    std::sort(clique.begin(), clique.end());
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) covered[*g.edge_index(clique[i], clique[j])] = true;
    }
    out.push_back(clique);
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 0) out.push_back({v});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::uint64_t key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

class Peeler {
 public:
  Peeler(const ProjectedGraph& g, double weight)
      : weight_(weight), adjacency_(g.adjacency_lists()), by_node_(g.node_count()) {
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      multiplicity_[key(edges[i].first, edges[i].second)] = g.multiplicities()[i];
    }
    for (auto& c : maximal_cliques(adjacency_)) add(std::move(c));
  }

  bool next(NodeSet& out) {
    while (!heap_.empty()) {
      const Entry top = heap_.top();
      heap_.pop();
      if (!alive_[top.id] || top.version != version_[top.id]) continue;
      out = cliques_[top.id];
      peel(top.id);
      return true;
    }
    return false;
  }

 private:
  struct Entry {
    double score;
    std::uint32_t id;
    std::uint32_t version;
  };

  double score(const NodeSet& c) const {
    double total = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        total += multiplicity_.at(key(c[i], c[j]));
        ++pairs;
      }
    }
    return static_cast<double>(c.size()) - weight_ * total / static_cast<double>(pairs);
  }

  void push(std::uint32_t id) { heap_.push({score(cliques_[id]), id, ++version_[id]}); }

  void add(NodeSet c) {
    if (c.size() < 2) return;
    auto [it, fresh] = index_.try_emplace(c, static_cast<std::uint32_t>(cliques_.size()));
    if (!fresh) {
      if (alive_[it->second]) return;
      alive_[it->second] = true;
      for (NodeId v : c) by_node_[v].push_back(it->second);
      push(it->second);
      return;
    }
    const auto id = it->second;
    for (NodeId v : c) by_node_[v].push_back(id);
    cliques_.push_back(std::move(c));
    alive_.push_back(true);
    version_.push_back(0);
    push(id);
  }

  // Live cliques holding both a and b.
  std::vector<std::uint32_t> holding(NodeId a, NodeId b) {
    std::vector<std::uint32_t> out;
    for (auto id : by_node_[a]) {
      const auto& c = cliques_[id];
      if (alive_[id] && std::binary_search(c.begin(), c.end(), b)) out.push_back(id);
    }
    return out;
  }

  void peel(std::uint32_t picked) {
    const NodeSet c = cliques_[picked];
    std::vector<std::pair<NodeId, NodeId>> removed;
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        auto& m = multiplicity_.at(key(c[i], c[j]));
        if (--m == 0) removed.emplace_back(c[i], c[j]);
        auto h = holding(c[i], c[j]);
        touched.insert(touched.end(), h.begin(), h.end());
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

    if (!removed.empty()) {
      for (auto [a, b] : removed) {
        multiplicity_.erase(key(a, b));
        auto& na = adjacency_[a];
        na.erase(std::lower_bound(na.begin(), na.end(), b));
        auto& nb = adjacency_[b];
        nb.erase(std::lower_bound(nb.begin(), nb.end(), a));
      }
      // Cliques that lost an edge die; every new maximal clique holds an
      // endpoint of a removed edge.
      for (auto id : touched) {
        const auto& t = cliques_[id];
        bool broken = false;
        for (std::size_t i = 0; i < t.size() && !broken; ++i) {
          for (std::size_t j = i + 1; j < t.size() && !broken; ++j) {
            broken = !multiplicity_.count(key(t[i], t[j]));
          }
        }
        if (broken) kill(id);
      }
      std::vector<NodeId> ends;
      for (auto [a, b] : removed) {
        ends.push_back(a);
        ends.push_back(b);
      }
      std::sort(ends.begin(), ends.end());
      ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
      for (NodeId v : ends) {
        if (adjacency_[v].empty()) continue;
        for (auto& k : maximal_cliques_containing(adjacency_, v)) add(std::move(k));
      }
    }
    for (auto id : touched) {
      if (alive_[id]) push(id);
    }
  }

  void kill(std::uint32_t id) {
    alive_[id] = false;
    for (NodeId v : cliques_[id]) {
      auto& list = by_node_[v];
      list.erase(std::find(list.begin(), list.end(), id));
    }
  }

  struct Order {
    const std::vector<NodeSet>* cliques;
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.score != b.score) return a.score < b.score;
      return (*cliques)[a.id] > (*cliques)[b.id];
    }
  };

  double weight_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::unordered_map<std::uint64_t, std::uint32_t> multiplicity_;
  std::vector<NodeSet> cliques_;
  std::vector<bool> alive_;
  std::vector<std::uint32_t> version_;
  std::unordered_map<NodeSet, std::uint32_t, NodeSetHash> index_;
  std::vector<std::vector<std::uint32_t>> by_node_;
  std::priority_queue<Entry, std::vector<Entry>, Order> heap_{Order{&cliques_}};
};

}  // namespace

std::vector<NodeSet> baseline_multiplicity(const ProjectedGraph& g, double weight) {
  if (!g.has_multiplicity() && g.edge_count() > 0) {
    throw ValidationError("multiplicity baseline needs edge multiplicities");
  }
  std::vector<NodeSet> out;
  Peeler peeler(g, weight);
  NodeSet c;
  while (peeler.next(c)) out.push_back(c);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 0) out.push_back({v});
  }
  return out;
}

}  // namespace hyperrecon
