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

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "hyperrecon/baselines.hpp"
#include "hyperrecon/diagnostics.hpp"
#include "hyperrecon/error.hpp"
#include "hyperrecon/pipeline.hpp"
#include "test_support.hpp"

namespace hyperrecon {
namespace {

using testing::planted_hypergraph;
using testing::random_hypergraph;

Hypergraph disjoint_triangles(std::size_t count) {
  std::vector<NodeSet> edges;
  for (NodeId i = 0; i < count; ++i) edges.push_back({3 * i, 3 * i + 1, 3 * i + 2});
  return Hypergraph(3 * count, edges);
}

PipelineConfig quick_config(FeatureKind kind, std::uint64_t beta) {
  PipelineConfig cfg;
  cfg.kind = kind;
  cfg.beta = beta;
  cfg.train.epochs = 300;
  cfg.train.learning_rate = 1e-2;
  cfg.seed = 5;
  return cfg;
}

std::set<NodeSet> mapped(const Hypergraph& h, const std::vector<NodeId>& origin) {
  std::set<NodeSet> out;
  for (const auto& e : h.hyperedges()) {
    NodeSet s;
    for (NodeId v : e) s.push_back(origin[v]);
    std::sort(s.begin(), s.end());
    out.insert(s);
  }
  return out;
}

TEST(Split, RandomHalvesAreDenseAndComplete) {
  std::mt19937_64 rng(1);
  auto h = planted_hypergraph(rng, 60, 80);
  SplitOptions opt;
  opt.seed = 3;
  auto s = split_dataset(h, opt);
  EXPECT_EQ(s.train.size(), 40u);
  EXPECT_EQ(s.query.size(), 40u);
  for (const auto* side : {&s.train, &s.query}) {
    std::vector<bool> seen(side->node_count(), false);
    for (const auto& e : side->hyperedges()) {
      for (auto v : e) seen[v] = true;
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  }
  auto a = mapped(s.train, s.train_origin);
  auto b = mapped(s.query, s.query_origin);
  for (const auto& e : b) a.insert(e);
  EXPECT_EQ(a, std::set<NodeSet>(h.hyperedges().begin(), h.hyperedges().end()));
  auto again = split_dataset(h, opt);
  EXPECT_EQ(again.train.hyperedges(), s.train.hyperedges());
  opt.seed = 4;
  EXPECT_NE(split_dataset(h, opt).train.hyperedges(), s.train.hyperedges());
}

TEST(Split, Temporal) {
  std::mt19937_64 rng(2);
  auto h = planted_hypergraph(rng, 40, 30);
  SplitOptions opt;
  opt.mode = SplitMode::kTemporal;
  opt.cutoff = 10;
  auto s = split_dataset(h, opt);
  EXPECT_EQ(s.train.size(), 10u);
  for (auto t : s.train.timestamps()) EXPECT_LE(t, 10);
  for (auto t : s.query.timestamps()) EXPECT_GT(t, 10);
  opt.cutoff.reset();
  opt.fraction = 0.6;
  EXPECT_EQ(split_dataset(h, opt).train.size(), 18u);
  opt.cutoff = 1000;
  EXPECT_THROW(split_dataset(h, opt), ValidationError);
  EXPECT_THROW(split_dataset(Hypergraph(3, {{0, 1}, {1, 2}}), opt), ValidationError);
}

TEST(Jaccard, Examples) {
  std::vector<NodeSet> a{{0, 1}, {2, 3}}, b{{1, 0}, {3, 4}};
  EXPECT_DOUBLE_EQ(jaccard(a, a), 1.0);
  EXPECT_DOUBLE_EQ(jaccard(a, b), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(jaccard(a, std::vector<NodeSet>{{5}}), 0.0);
  EXPECT_DOUBLE_EQ(jaccard(std::vector<NodeSet>{}, std::vector<NodeSet>{}), 1.0);
  std::vector<NodeSet> dup{{0, 1}, {0, 1}, {2, 3}};
  EXPECT_DOUBLE_EQ(jaccard(a, dup), 1.0);
}

TEST(Evaluate, NestedMiss) {
  Hypergraph truth(3, {{0, 1, 2}, {0, 1}});
  auto r = evaluate_partitioned(truth, std::vector<NodeSet>{{0, 1, 2}});
  EXPECT_DOUBLE_EQ(r.error1_share, 0.5);
  EXPECT_DOUBLE_EQ(r.error2_share, 0.0);
  EXPECT_DOUBLE_EQ(r.other_share, 0.0);
  EXPECT_DOUBLE_EQ(r.jaccard, 0.5);
  auto perfect = evaluate_partitioned(truth, truth.hyperedges());
  EXPECT_EQ(perfect.jaccard, 1.0);
  EXPECT_EQ(perfect.error1_share + perfect.error2_share + perfect.other_share, 0.0);
}

TEST(Evaluate, MaxCliquePredictionReproducesDiagnostics) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = random_hypergraph(rng, 5 + trial % 10, 12, 5);
    auto m = maximal_cliques(project(h));
    auto r = evaluate_partitioned(h, m.cliques, m);
    auto d = error_partition(h, m);
    EXPECT_EQ(r.other_share, 0.0);
    EXPECT_DOUBLE_EQ(r.error1_share, d.error1);
    EXPECT_DOUBLE_EQ(r.error2_share, d.error2);
    EXPECT_DOUBLE_EQ(r.jaccard, d.jaccard_maxclique);
  }
}

TEST(Evaluate, SharesSumToOne) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = random_hypergraph(rng, 8, 12, 4);
    auto p = random_hypergraph(rng, 8, 12, 4);
    auto r = evaluate_partitioned(h, p.hyperedges());
    EXPECT_NEAR(r.jaccard + r.error1_share + r.error2_share + r.other_share, 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(r.jaccard, jaccard(h.hyperedges(), p.hyperedges()));
  }
}

TEST(Pipeline, DisjointTrianglesArePerfect) {
  auto h = disjoint_triangles(6);
  for (auto kind : {FeatureKind::kCount, FeatureKind::kMotif}) {
    auto r = run_pipeline(h, project(h), quick_config(kind, 100));
    EXPECT_DOUBLE_EQ(jaccard(h.hyperedges(), r.reconstruction), 1.0);
    EXPECT_DOUBLE_EQ(r.training_recall, 1.0);
  }
}

TEST(Pipeline, PlantedDataDeterministicAndSane) {
  std::mt19937_64 rng(8);
  auto h = planted_hypergraph(rng, 120, 160);
  SplitOptions opt;
  opt.seed = 1;
  auto s = split_dataset(h, opt);
  auto g1 = project(s.query);
  for (auto kind : {FeatureKind::kCount, FeatureKind::kMotif}) {
    auto cfg = quick_config(kind, 400);
    auto a = run_pipeline(s.train, g1, cfg);
    auto b = run_pipeline(s.train, g1, cfg);
    EXPECT_EQ(a.reconstruction, b.reconstruction);
    EXPECT_GT(a.train_positives, 0u);
    EXPECT_LT(a.train_positives, a.train_candidates);
    EXPECT_LE(planned_draws(a.plan, rho_table(s.train)), 400.0 + 1e-9);
    const double score = jaccard(s.query.hyperedges(), a.reconstruction);
    EXPECT_GT(score, 0.2);
    for (const auto& e : a.reconstruction) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) EXPECT_TRUE(g1.has_edge(e[i], e[j]));
      }
    }
  }
}

TEST(Pipeline, SingleClassPoolGivesConstantModel) {
  // Every sampled training candidate is a hyperedge.
  auto h = disjoint_triangles(4);
  auto cfg = quick_config(FeatureKind::kCount, 4);
  auto run = prepare_run(h, project(h), cfg);
  EXPECT_EQ(run.train_pool.positives(), run.train_pool.size());
  auto m = fit_model(run, cfg);
  EXPECT_EQ(reconstruct(m, run).size(), run.query_pool.size());
}

TEST(TuneBeta, SingletonGridAndTies) {
  auto h = disjoint_triangles(20);
  TuneOptions opt;
  opt.betas = {50};
  auto cfg = quick_config(FeatureKind::kCount, 0);
  EXPECT_EQ(tune_beta(h, opt, cfg).beta, 50u);
  // Every beta >= #triangles collects everything; the smallest wins.
  opt.betas = {200, 100, 40};
  auto r = tune_beta(h, opt, cfg);
  EXPECT_EQ(r.beta, 40u);
  EXPECT_EQ(r.points.size(), 3u);
  opt.betas.clear();
  EXPECT_THROW(tune_beta(h, opt, cfg), ValidationError);
}

TEST(TuneBeta, ThresholdGrid) {
  std::mt19937_64 rng(9);
  auto h = planted_hypergraph(rng, 100, 150);
  TuneOptions opt;
  opt.betas = {100, 300};
  opt.thresholds = {0.3, 0.5, 0.7};
  auto r = tune_beta(h, opt, quick_config(FeatureKind::kCount, 0));
  ASSERT_EQ(r.points.size(), 6u);
  double best = 0.0;
  for (const auto& p : r.points) best = std::max(best, p.jaccard);
  auto it = std::find_if(r.points.begin(), r.points.end(), [&](const auto& p) { return p.jaccard == best; });
  EXPECT_EQ(r.beta, it->beta);
  EXPECT_EQ(r.threshold, it->threshold);
  EXPECT_LE(r.points[0].training_recall, r.points[3].training_recall);
}

TEST(FeatureAblation, RankingAndConstantColumns) {
  std::mt19937_64 rng(10);
  auto h = planted_hypergraph(rng, 100, 140);
  SplitOptions opt;
  opt.seed = 2;
  auto s = split_dataset(h, opt);
  auto cfg = quick_config(FeatureKind::kCount, 300);
  auto r = feature_ablation(s.train, s.query, cfg);
  ASSERT_EQ(r.ranking.size(), 8u);
  for (std::size_t i = 1; i < r.ranking.size(); ++i) EXPECT_GE(r.ranking[i - 1].drop, r.ranking[i].drop);
  // A column that is one constant across both pools carries nothing.
  auto run = prepare_run(s.train, project(s.query), cfg);
  for (const auto& e : r.ranking) {
    std::set<double> values;
    for (const auto* x : {&run.train_x, &run.query_x}) {
      for (std::size_t i = 0; i < x->rows; ++i) values.insert(x->values[i * x->cols + e.index]);
    }
    if (values.size() == 1) {
      EXPECT_EQ(e.drop, 0.0) << e.name;
    }
  }
}

TEST(CompareSamplers, PlanCollectsMostOnPlantedData) {
  std::mt19937_64 rng(11);
  auto h = planted_hypergraph(rng, 150, 200);
  SplitOptions opt;
  opt.seed = 3;
  auto s = split_dataset(h, opt);
  auto cmp = compare_samplers(s.train, s.query, quick_config(FeatureKind::kCount, 300), true);
  ASSERT_EQ(cmp.size(), 4u);
  EXPECT_EQ(cmp[0].sampler, "plan");
  for (std::size_t i = 1; i < cmp.size(); ++i) EXPECT_GT(cmp[0].hits, cmp[i].hits) << cmp[i].sampler;
  for (const auto& c : cmp) {
    ASSERT_TRUE(c.jaccard.has_value());
    EXPECT_GE(*c.jaccard, 0.0);
  }
}

}  // namespace
}  // namespace hyperrecon
