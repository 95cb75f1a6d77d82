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

#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "hyperrecon/baselines.hpp"
#include "hyperrecon/error.hpp"
#include "test_support.hpp"

namespace hyperrecon {
namespace {

using testing::random_graph;
using testing::random_hypergraph;

bool is_clique(const ProjectedGraph& g, const NodeSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

// Fewest cliques whose edges cover the graph, by search over clique sets.
std::size_t brute_min_cover(const ProjectedGraph& g) {
  std::vector<std::uint32_t> cliques;
  for (auto c : testing::brute_cliques(g)) {
    if (__builtin_popcount(c) >= 2) cliques.push_back(c);
  }
  const auto& edges = g.edges();
  for (std::size_t k = 1; k <= edges.size(); ++k) {
    std::vector<std::size_t> pick(k, 0);
    // all multisets of size k over cliques
    while (true) {
      std::vector<bool> hit(edges.size(), false);
      for (auto p : pick) {
        for (std::size_t e = 0; e < edges.size(); ++e) {
          const std::uint32_t bits = (1u << edges[e].first) | (1u << edges[e].second);
          if ((cliques[p] & bits) == bits) hit[e] = true;
        }
      }
      if (std::find(hit.begin(), hit.end(), false) == hit.end()) return k;
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == cliques.size() - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[i - 1];
    }
  }
  return 0;
}

TEST(MaxClique, EqualsMaximalCliques) {
  std::mt19937_64 rng(2);
  auto g = random_graph(rng, 20, 0.3);
  EXPECT_EQ(baseline_max_clique(g), maximal_cliques(g).cliques);
}

TEST(CliqueCover, TriangleAndBowtie) {
  ProjectedGraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(baseline_clique_cover(tri), (std::vector<NodeSet>{{0, 1, 2}}));
  ProjectedGraph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  auto cover = baseline_clique_cover(bowtie);
  EXPECT_EQ(cover, (std::vector<NodeSet>{{0, 1, 2}, {2, 3, 4}}));
  EXPECT_EQ(cover.size(), brute_min_cover(bowtie));
}

TEST(CliqueCover, CoversEveryEdgeWithCliques) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_graph(rng, 5 + trial % 20, 0.1 + 0.05 * (trial % 10));
    for (std::uint64_t seed : {0u, 3u}) {
      auto cover = baseline_clique_cover(g, seed);
      std::set<Edge> hit;
      for (const auto& c : cover) {
        ASSERT_TRUE(is_clique(g, c));
        for (std::size_t i = 0; i < c.size(); ++i) {
          for (std::size_t j = i + 1; j < c.size(); ++j) hit.emplace(c[i], c[j]);
        }
        if (c.size() == 1) {
          EXPECT_EQ(g.degree(c[0]), 0u);
        }
      }
      EXPECT_EQ(hit.size(), g.edge_count());
      for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) == 0) {
          EXPECT_TRUE(std::binary_search(cover.begin(), cover.end(), NodeSet{v}));
        }
      }
    }
  }
}

TEST(CliqueCover, NeverBelowBruteForceMinimum) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_graph(rng, 6, 0.5);
    if (g.edge_count() == 0 || g.edge_count() > 9) continue;
    std::size_t nontrivial = 0;
    for (const auto& c : baseline_clique_cover(g)) nontrivial += c.size() >= 2;
    EXPECT_GE(nontrivial, brute_min_cover(g));
  }
}

TEST(Multiplicity, DisjointHyperedgesRecovered) {
  Hypergraph h(9, {{0, 1, 2}, {3, 4}, {5, 6, 7, 8}});
  auto out = baseline_multiplicity(project(h, true));
  std::sort(out.begin(), out.end());
  EXPECT_EQ(out, h.hyperedges());
}

TEST(Multiplicity, TrianglesSharingDoubleEdge) {
  Hypergraph h(4, {{0, 1, 2}, {1, 2, 3}});
  auto g = project(h, true);
  EXPECT_EQ(g.multiplicity(1, 2), 2u);
  EXPECT_EQ(baseline_multiplicity(g), (std::vector<NodeSet>{{0, 1, 2}, {1, 2, 3}}));
}

TEST(Multiplicity, ConservesEdgeMultiplicities) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    auto h = random_hypergraph(rng, 6 + trial % 10, 14, 5);
    auto g = project(h, true);
    const double w = trial % 3 == 0 ? 0.0 : 1.0 + trial % 4;
    auto out = baseline_multiplicity(g, w);
    std::map<Edge, std::uint32_t> count;
    for (const auto& c : out) {
      ASSERT_TRUE(is_clique(g, c));
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = i + 1; j < c.size(); ++j) ++count[{c[i], c[j]}];
      }
    }
    ASSERT_EQ(count.size(), g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      EXPECT_EQ(count[g.edges()[e]], g.multiplicities()[e]);
    }
  }
  EXPECT_THROW(baseline_multiplicity(ProjectedGraph(2, {{0, 1}})), ValidationError);
}

}  // namespace
}  // namespace hyperrecon
