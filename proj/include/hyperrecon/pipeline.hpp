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

#ifndef HYPERRECON_PIPELINE_HPP_
#define HYPERRECON_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperrecon/classifier.hpp"
#include "hyperrecon/cliques.hpp"
#include "hyperrecon/features.hpp"
#include "hyperrecon/hypergraph.hpp"
#include "hyperrecon/sampler.hpp"

namespace hyperrecon {

enum class SplitMode { kRandom, kTemporal };

struct SplitOptions {
  SplitMode mode = SplitMode::kRandom;
  // Share of hyperedges that go to the training side. Temporal mode takes
  // the earliest ones unless `cutoff` is set.
  double fraction = 0.5;
  // Temporal mode: hyperedges stamped <= cutoff train, the rest query.
  std::optional<std::int64_t> cutoff;
  std::uint64_t seed = 0;
};

struct SplitResult {
  Hypergraph train;
  Hypergraph query;
  // New id -> id in the input hypergraph, per side.
  std::vector<NodeId> train_origin;
  std::vector<NodeId> query_origin;
};

// Splits the hyperedges in two and gives each side its own dense, randomly
// permuted node ids. Throws ValidationError if a side ends up empty.
SplitResult split_dataset(const Hypergraph& h, const SplitOptions& options);

enum class SamplerChoice { kPlan, kRandom, kSmall, kHeadAndTail };

SamplerChoice parse_sampler_choice(const std::string& s);
std::string to_string(SamplerChoice s);

struct PipelineConfig {
  std::uint64_t beta = 1000;
  FeatureKind kind = FeatureKind::kCount;
  TrainConfig train;
  // Master seed; sampler and initialization streams derive from it and
  // override train.seed.
  std::uint64_t seed = 0;
  SamplerChoice sampler = SamplerChoice::kPlan;
  std::size_t clique_cap = kDefaultCliqueCap;
};

// Steps 1-2 and the feature matrices of steps 3-4.
struct PreparedRun {
  SamplerPlan plan;
  CandidateSet train_pool;  // labeled against the training hyperedges
  CandidateSet query_pool;
  FeatureMatrix train_x;
  FeatureMatrix query_x;
  std::size_t train_hyperedges = 0;
  std::size_t train_maximal_cliques = 0;
  std::size_t query_maximal_cliques = 0;
};

PreparedRun prepare_run(const Hypergraph& train, const ProjectedGraph& query,
                        const PipelineConfig& cfg);
// The two halves of prepare_run. prepare_query reuses run.plan, so a plan
// loaded from disk can be applied to a new query graph.
PreparedRun prepare_training(const Hypergraph& train, const PipelineConfig& cfg);
void prepare_query(PreparedRun& run, const ProjectedGraph& query, const PipelineConfig& cfg);

// Trains on the prepared training pool. A pool holding one class gives a
// constant model that answers that class.
Model fit_model(const PreparedRun& run, const PipelineConfig& cfg, TrainReport* report = nullptr);

// Query candidates the model accepts.
std::vector<NodeSet> reconstruct(const Model& m, const PreparedRun& run);

struct PipelineResult {
  std::vector<NodeSet> reconstruction;
  SamplerPlan plan;
  Model model;
  std::size_t train_candidates = 0;
  std::size_t train_positives = 0;
  std::size_t query_candidates = 0;
  double training_recall = 0.0;  // expected yield / |training hyperedges|
};

PipelineResult run_pipeline(const Hypergraph& train, const ProjectedGraph& query,
                            const PipelineConfig& cfg);

// Set-of-sets Jaccard after deduplication; 1 when both sides are empty.
double jaccard(std::span<const NodeSet> truth, std::span<const NodeSet> predicted);

struct EvaluationReport {
  double jaccard = 1.0;
  double error1_share = 0.0;
  double error2_share = 0.0;
  double other_share = 0.0;
  std::size_t truth_count = 0;
  std::size_t predicted_count = 0;
  std::size_t intersection = 0;
  std::size_t union_count = 0;
};

// Splits every mistake of `predicted` into those the maximal-clique baseline
// also makes (Error I when the missed hyperedge is nested, Error II
// otherwise) and the rest ("other"). `m` is the maximal clique set of the
// truth's projection.
EvaluationReport evaluate_partitioned(const Hypergraph& truth, std::span<const NodeSet> predicted,
                                      const CliqueSet& m);
EvaluationReport evaluate_partitioned(const Hypergraph& truth, std::span<const NodeSet> predicted);

struct TuneOptions {
  std::vector<std::uint64_t> betas;
  // Thresholds tried per beta; empty keeps the configured one.
  std::vector<double> thresholds;
  double train_fraction = 0.9;
};

struct TunePoint {
  std::uint64_t beta = 0;
  double threshold = 0.5;
  double jaccard = 0.0;
  double training_recall = 0.0;
};

struct TuneResult {
  std::uint64_t beta = 0;
  double threshold = 0.5;
  std::vector<TunePoint> points;
};

// Holds out a share of the training hyperedges, runs the pipeline for each
// grid point and keeps the best held-out Jaccard (smaller beta, then the
// earlier threshold, on ties).
TuneResult tune_beta(const Hypergraph& train, const TuneOptions& options, const PipelineConfig& cfg);

struct FeatureAblationEntry {
  std::size_t index = 0;
  std::string name;
  double jaccard = 0.0;
  double drop = 0.0;
};

struct FeatureAblationResult {
  double baseline_jaccard = 0.0;
  std::vector<FeatureAblationEntry> ranking;  // largest drop first
};

// Retrains with one feature column zeroed at a time.
FeatureAblationResult feature_ablation(const Hypergraph& train, const Hypergraph& query,
                                       const PipelineConfig& cfg);

struct SamplerComparison {
  std::string sampler;
  std::size_t candidates = 0;
  std::size_t hits = 0;  // true query hyperedges among the candidates
  double recall = 0.0;
  std::optional<double> jaccard;  // full reconstruction, when requested
};

// The plan sampler against the three heuristics on the query side at the
// same budget.
std::vector<SamplerComparison> compare_samplers(const Hypergraph& train, const Hypergraph& query,
                                                const PipelineConfig& cfg, bool reconstruct);

void to_json(nlohmann::json& j, const EvaluationReport& r);
void to_json(nlohmann::json& j, const TuneResult& r);
void to_json(nlohmann::json& j, const FeatureAblationResult& r);
void to_json(nlohmann::json& j, const SamplerComparison& r);

}  // namespace hyperrecon

#endif  // HYPERRECON_PIPELINE_HPP_
