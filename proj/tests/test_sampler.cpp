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

#include <cmath>
#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "hyperrecon/error.hpp"
#include "hyperrecon/graph.hpp"
#include "hyperrecon/sampler.hpp"
#include "sampler_oracle.hpp"
#include "test_support.hpp"

namespace hyperrecon {
namespace {

using testing::brute_force_best_yield;
using testing::random_hypergraph;
using testing::random_rho_table;

std::size_t fractional_cells(const SamplerPlan& p) {
  std::size_t f = 0;
  for (const auto& [c, r] : p.ratios) f += r > 0.0 && r < 1.0;
  return f;
}

TEST(OptimizePlan, ZeroBudget) {
  auto t = rho_table(Hypergraph(3, {{0, 1, 2}, {0, 1}}));
  auto p = optimize_plan(t, 0);
  EXPECT_TRUE(p.ratios.empty());
  EXPECT_EQ(p.expected_yield, 0.0);
}

TEST(OptimizePlan, PrefersDenseCells) {
  // Cells (3,3): 1 of 1, (3,2): 1 of 3, (3,1): 0 of 3.
  auto t = rho_table(Hypergraph(3, {{0, 1, 2}, {0, 1}}));
  auto p = optimize_plan(t, 1);
  EXPECT_EQ(p.ratio({3, 3}), 1.0);
  EXPECT_DOUBLE_EQ(p.expected_yield, 1.0);
  p = optimize_plan(t, 2);
  EXPECT_DOUBLE_EQ(p.ratio({3, 2}), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(p.expected_yield, 1.0 + 1.0 / 3.0);
  p = optimize_plan(t, 100);
  EXPECT_EQ(p.ratio({3, 1}), 0.0);  // nothing to collect there
  EXPECT_DOUBLE_EQ(p.expected_yield, 2.0);
}

TEST(OptimizePlan, FullBudgetCollectsEverything) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = random_hypergraph(rng, 8, 12, 5);
    auto t = rho_table(h);
    double total = 0.0;
    for (const auto& [c, cell] : t.cells) total += cell.q;
    auto p = optimize_plan(t, static_cast<std::uint64_t>(total));
    EXPECT_DOUBLE_EQ(p.expected_yield, static_cast<double>(h.size()));
  }
}

TEST(OptimizePlan, BudgetFractionalityAndMonotonicity) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto t = random_rho_table(rng, 8);
    double last = 0.0;
    for (std::uint64_t beta = 0; beta <= 120; beta += 3) {
      auto p = optimize_plan(t, beta);
      EXPECT_LE(planned_draws(p, t), static_cast<double>(beta) + 1e-9);
      EXPECT_LE(fractional_cells(p), 1u);
      EXPECT_GE(p.expected_yield, last - 1e-12);
      last = p.expected_yield;
    }
  }
}

TEST(OptimizePlan, GreedyGuaranteeAgainstExhaustiveOptimum) {
  std::mt19937_64 rng(17);
  const double bound = 1.0 - std::exp(-1.0);
  for (int trial = 0; trial < 200; ++trial) {
    auto t = random_rho_table(rng, 6);
    double total = 0.0;
    for (const auto& [c, cell] : t.cells) total += cell.q;
    for (double f : {0.1, 0.25, 0.5, 0.75, 1.0}) {
      const auto beta = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(f * total));
      const double best = brute_force_best_yield(t, static_cast<double>(beta));
      const auto p = optimize_plan(t, beta);
      EXPECT_GE(p.expected_yield, bound * best - 1e-9) << "trial " << trial << " beta " << beta;
      EXPECT_LE(p.expected_yield, best + 1e-9);
    }
  }
}

TEST(ExpectedYield, HandExamples) {
  RhoTable t;
  t.cells[{3, 2}] = RhoCell{{7}, 3.0};
  t.cells[{4, 2}] = RhoCell{{7}, 6.0};
  SamplerPlan p;
  p.ratios[{3, 2}] = 1.0;
  EXPECT_DOUBLE_EQ(expected_yield(p, t), 1.0);
  p.ratios[{3, 2}] = 0.5;
  p.ratios[{4, 2}] = 0.5;
  EXPECT_DOUBLE_EQ(expected_yield(p, t), 0.75);
}

TEST(ExpectedYield, MatchesSimulationOfSetSampling) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ratio(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = random_rho_table(rng, 6);
    SamplerPlan p;
    for (const auto& [c, cell] : t.cells) p.ratios[c] = ratio(rng);
    const int trials = 10000;
    double sum = 0.0, sq = 0.0;
    std::bernoulli_distribution keep(0.5);
    for (int s = 0; s < trials; ++s) {
      std::set<std::uint32_t> got;
      for (const auto& [c, cell] : t.cells) {
        std::bernoulli_distribution b(p.ratios[c]);
        for (auto id : cell.hyperedges) {
          if (b(rng)) got.insert(id);
        }
      }
      sum += got.size();
      sq += static_cast<double>(got.size()) * got.size();
    }
    const double mean = sum / trials;
    const double se = std::sqrt(std::max(0.0, sq / trials - mean * mean) / trials);
    EXPECT_LE(std::abs(mean - expected_yield(p, t)), 3.0 * se + 1e-9) << "trial " << trial;
  }
}

TEST(SamplerPlan, JsonRoundTrip) {
  SamplerPlan p;
  p.beta = 42;
  p.ratios[{3, 2}] = 0.25;
  p.ratios[{5, 5}] = 1.0;
  p.expected_yield = 3.5;
  nlohmann::json j = p;
  EXPECT_EQ(j["cells"].size(), 2u);
  auto q = j.get<SamplerPlan>();
  EXPECT_EQ(q.beta, 42u);
  EXPECT_EQ(q.ratios, p.ratios);
  EXPECT_EQ(q.expected_yield, 3.5);
  j["cells"][0]["r"] = 1.5;
  EXPECT_THROW(j.get<SamplerPlan>(), ValidationError);
}

ProjectedGraph triangle() { return ProjectedGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

TEST(DrawCandidates, TriangleTopCell) {
  auto g = triangle();
  auto m = maximal_cliques(g);
  SamplerPlan p;
  p.ratios[{3, 3}] = 1.0;
  auto c = draw_candidates(g, m, p, 1);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.candidates[0], (NodeSet{0, 1, 2}));
  EXPECT_EQ(c.provenance[0], (std::vector<CellIndex>{{3, 3}}));
}

TEST(DrawCandidates, EmptyPlanAndMissingRows) {
  auto g = triangle();
  auto m = maximal_cliques(g);
  EXPECT_TRUE(draw_candidates(g, m, SamplerPlan{}, 1).empty());
  SamplerPlan p;
  p.ratios[{7, 2}] = 1.0;  // no size-7 cliques here
  p.ratios[{3, 2}] = 0.0;
  EXPECT_TRUE(draw_candidates(g, m, p, 1).empty());
}

TEST(DrawCandidates, MergesAcrossCellsAndCliques) {
  // Two triangles sharing edge {1,2}: the edge comes from both cliques.
  ProjectedGraph g(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  auto m = maximal_cliques(g);
  SamplerPlan p;
  p.ratios[{3, 2}] = 1.0;
  p.ratios[{3, 3}] = 1.0;
  auto c = draw_candidates(g, m, p, 9);
  EXPECT_EQ(c.size(), 5u + 2u);
  std::set<NodeSet> distinct(c.candidates.begin(), c.candidates.end());
  EXPECT_EQ(distinct.size(), c.size());
  EXPECT_TRUE(std::is_sorted(c.candidates.begin(), c.candidates.end()));
}

TEST(DrawCandidates, DeterministicAndCliquesOnly) {
  std::mt19937_64 rng(31);
  auto h = random_hypergraph(rng, 30, 25, 6);
  auto g = project(h);
  auto m = maximal_cliques(g);
  auto p = optimize_plan(rho_table(h, m), 60);
  auto a = draw_candidates(g, m, p, 77);
  auto b = draw_candidates(g, m, p, 77);
  EXPECT_EQ(a.candidates, b.candidates);
  EXPECT_EQ(a.provenance, b.provenance);
  for (const auto& s : a.candidates) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) EXPECT_TRUE(g.has_edge(s[i], s[j]));
    }
  }
}

// Each (clique, subset) pair is kept with probability r.
TEST(DrawCandidates, PerPairRetentionRate) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < 5; ++u) {
    for (NodeId v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
  }
  ProjectedGraph g(5, edges);
  auto m = maximal_cliques(g);
  SamplerPlan p;
  p.ratios[{5, 2}] = 0.3;
  std::map<NodeSet, int> hits;
  const int seeds = 4000;
  for (int s = 0; s < seeds; ++s) {
    for (const auto& c : draw_candidates(g, m, p, s).candidates) ++hits[c];
  }
  ASSERT_EQ(hits.size(), 10u);
  const double se = std::sqrt(0.3 * 0.7 / seeds);
  for (const auto& [c, h] : hits) EXPECT_NEAR(h / double(seeds), 0.3, 4.0 * se);
}

TEST(DrawCandidates, LargeSubsetSpaceCount) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < 20; ++u) {
    for (NodeId v = u + 1; v < 20; ++v) edges.emplace_back(u, v);
  }
  ProjectedGraph g(20, edges);
  auto m = maximal_cliques(g);
  SamplerPlan p;
  p.ratios[{20, 10}] = 0.001;  // C(20,10) = 184756 > 4096
  double sum = 0.0;
  const int seeds = 200;
  for (int s = 0; s < seeds; ++s) {
    auto c = draw_candidates(g, m, p, s);
    for (const auto& x : c.candidates) ASSERT_EQ(x.size(), 10u);
    sum += c.size();
  }
  const double mean = 184.756;
  const double se = std::sqrt(184756 * 0.001 * 0.999 / seeds);
  EXPECT_NEAR(sum / seeds, mean, 4.0 * se);
}

TEST(Labels, FromHypergraph) {
  Hypergraph h(3, {{0, 1, 2}, {0, 1}});
  auto g = project(h);
  auto m = maximal_cliques(g);
  SamplerPlan p;
  for (std::uint32_t k = 1; k <= 3; ++k) p.ratios[{3, k}] = 1.0;
  auto c = draw_candidates(g, m, p, 0);
  label_candidates(c, h);
  EXPECT_EQ(c.size(), 7u);
  EXPECT_EQ(c.positives(), 2u);
}

TEST(Ablation, SmallAndHeadTailOnTriangle) {
  auto g = triangle();
  auto m = maximal_cliques(g);
  auto s = ablation_sampler(g, m, AblationKind::kSmall, 500, 1);
  EXPECT_EQ(s.candidates, (std::vector<NodeSet>{{0}, {0, 1}, {0, 2}, {1}, {1, 2}, {2}}));
  auto ht = ablation_sampler(g, m, AblationKind::kHeadAndTail, 500, 1);
  EXPECT_EQ(ht.size(), 7u);
  EXPECT_TRUE(std::find(ht.candidates.begin(), ht.candidates.end(), NodeSet{0, 1, 2}) !=
              ht.candidates.end());
}

TEST(Ablation, RandomGrowthYieldsCliques) {
  std::mt19937_64 rng(41);
  auto g = testing::random_graph(rng, 25, 0.3);
  auto m = maximal_cliques(g);
  auto a = ablation_sampler(g, m, AblationKind::kRandom, 300, 5);
  auto b = ablation_sampler(g, m, AblationKind::kRandom, 300, 5);
  EXPECT_EQ(a.candidates, b.candidates);
  EXPECT_LE(a.size(), 300u);
  std::set<std::size_t> sizes;
  for (const auto& s : a.candidates) {
    sizes.insert(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) EXPECT_TRUE(g.has_edge(s[i], s[j]));
    }
  }
  EXPECT_GT(sizes.size(), 2u);
  EXPECT_EQ(parse_ablation_kind("head_and_tail"), AblationKind::kHeadAndTail);
  EXPECT_THROW(parse_ablation_kind("bogus"), ValidationError);
}

}  // namespace
}  // namespace hyperrecon
