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

#include "hyperrecon/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "hyperrecon/diagnostics.hpp"
#include "hyperrecon/error.hpp"
#include "hyperrecon/graph.hpp"
#include "hyperrecon/random.hpp"
#include "hyperrecon/structure.hpp"

namespace hyperrecon {

namespace {

Hypergraph reindexed(const Hypergraph& h, const std::vector<std::size_t>& picked,
                     std::uint64_t seed, std::vector<NodeId>& origin) {
  std::vector<bool> used(h.node_count(), false);
  for (auto i : picked) {
    for (NodeId v : h[i]) used[v] = true;
  }
  origin.clear();
  for (NodeId v = 0; v < h.node_count(); ++v) {
    if (used[v]) origin.push_back(v);
  }
  Rng rng(seed);
  for (std::size_t i = origin.size(); i > 1; --i) {
    std::swap(origin[i - 1], origin[uniform_below(rng, i)]);
  }
  std::vector<NodeId> to_new(h.node_count(), 0);
  for (std::size_t i = 0; i < origin.size(); ++i) to_new[origin[i]] = static_cast<NodeId>(i);
  std::vector<NodeSet> edges;
  std::vector<std::int64_t> times;
  edges.reserve(picked.size());
  for (auto i : picked) {
    NodeSet e;
    for (NodeId v : h[i]) e.push_back(to_new[v]);
    edges.push_back(std::move(e));
    if (h.has_timestamps()) times.push_back(h.timestamps()[i]);
  }
  return Hypergraph(origin.size(), std::move(edges), std::move(times));
}

}  // namespace

SplitResult split_dataset(const Hypergraph& h, const SplitOptions& options) {
  const std::size_t m = h.size();
  if (!(options.fraction > 0.0 && options.fraction < 1.0) && !options.cutoff) {
    throw ValidationError("split fraction must lie strictly between 0 and 1");
  }
  std::vector<bool> to_train(m, false);
  if (options.mode == SplitMode::kTemporal) {
    if (!h.has_timestamps()) throw ValidationError("temporal split needs per-hyperedge timestamps");
    if (options.cutoff) {
      for (std::size_t i = 0; i < m; ++i) to_train[i] = h.timestamps()[i] <= *options.cutoff;
    } else {
      std::vector<std::size_t> order(m);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
        return h.timestamps()[a] < h.timestamps()[b];
      });
      const auto n = static_cast<std::size_t>(std::llround(options.fraction * static_cast<double>(m)));
      for (std::size_t i = 0; i < n; ++i) to_train[order[i]] = true;
    }
  } else {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(derive_seed(options.seed, Stream::kSplit));
    for (std::size_t i = m; i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
    const auto n = static_cast<std::size_t>(std::llround(options.fraction * static_cast<double>(m)));
    for (std::size_t i = 0; i < n; ++i) to_train[order[i]] = true;
  }
  std::vector<std::size_t> a, b;
  for (std::size_t i = 0; i < m; ++i) (to_train[i] ? a : b).push_back(i);
  if (a.empty() || b.empty()) throw ValidationError("split leaves one side without hyperedges");
  SplitResult r;
  const auto base = static_cast<std::uint64_t>(Stream::kReindex);
  r.train = reindexed(h, a, derive_seed(options.seed, {base, 0}), r.train_origin);
  r.query = reindexed(h, b, derive_seed(options.seed, {base, 1}), r.query_origin);
  return r;
}

SamplerChoice parse_sampler_choice(const std::string& s) {
  if (s == "plan") return SamplerChoice::kPlan;
  switch (parse_ablation_kind(s)) {
    case AblationKind::kRandom: return SamplerChoice::kRandom;
    case AblationKind::kSmall: return SamplerChoice::kSmall;
    case AblationKind::kHeadAndTail: return SamplerChoice::kHeadAndTail;
  }
  throw ValidationError("unknown sampler: " + s);
}

std::string to_string(SamplerChoice s) {
  switch (s) {
    case SamplerChoice::kPlan: return "plan";
    case SamplerChoice::kRandom: return "random";
    case SamplerChoice::kSmall: return "small";
    case SamplerChoice::kHeadAndTail: return "head_and_tail";
  }
  return "?";
}

namespace {

AblationKind ablation_of(SamplerChoice s) {
  switch (s) {
    case SamplerChoice::kRandom: return AblationKind::kRandom;
    case SamplerChoice::kSmall: return AblationKind::kSmall;
    default: return AblationKind::kHeadAndTail;
  }
}

CandidateSet draw_side(const ProjectedGraph& g, const CliqueSet& m, const SamplerPlan& plan,
                       const PipelineConfig& cfg, std::uint64_t side) {
  if (cfg.sampler == SamplerChoice::kPlan) {
    return draw_candidates(g, m, plan,
                           derive_seed(cfg.seed, {static_cast<std::uint64_t>(Stream::kSampler), side}));
  }
  return ablation_sampler(g, m, ablation_of(cfg.sampler), cfg.beta,
                          derive_seed(cfg.seed, {static_cast<std::uint64_t>(Stream::kAblation), side}));
}

}  // namespace

PreparedRun prepare_training(const Hypergraph& train, const PipelineConfig& cfg) {
  PreparedRun run;
  const auto g0 = project(train);
  const auto m0 = maximal_cliques(g0, cfg.clique_cap);
  run.train_hyperedges = train.size();
  run.train_maximal_cliques = m0.size();
  if (cfg.sampler == SamplerChoice::kPlan) {
    run.plan = optimize_plan(rho_table(train, m0), cfg.beta);
  } else {
    run.plan.beta = cfg.beta;
  }
  run.train_pool = draw_side(g0, m0, run.plan, cfg, 0);
  label_candidates(run.train_pool, train);
  run.train_x = extract_matrix(MotifContext(g0, m0), cfg.kind, run.train_pool.candidates);
  return run;
}

void prepare_query(PreparedRun& run, const ProjectedGraph& query, const PipelineConfig& cfg) {
  const auto m1 = maximal_cliques(query, cfg.clique_cap);
  run.query_maximal_cliques = m1.size();
  run.query_pool = draw_side(query, m1, run.plan, cfg, 1);
  run.query_x = extract_matrix(MotifContext(query, m1), cfg.kind, run.query_pool.candidates);
}

PreparedRun prepare_run(const Hypergraph& train, const ProjectedGraph& query,
                        const PipelineConfig& cfg) {
  auto run = prepare_training(train, cfg);
  prepare_query(run, query, cfg);
  return run;
}

Model fit_model(const PreparedRun& run, const PipelineConfig& cfg, TrainReport* report) {
  TrainConfig t = cfg.train;
  t.seed = derive_seed(cfg.seed, Stream::kInit);
  const auto& labels = *run.train_pool.labels;
  const std::size_t pos = run.train_pool.positives();
  if (pos == 0 || pos == labels.size()) {
    Model m = Model::constant(cfg.kind, pos > 0);
    m.threshold = t.threshold;
    m.seed = t.seed;
    if (report) {
      report->loss.clear();
      report->positives = pos;
      report->negatives = labels.size() - pos;
    }
    return m;
  }
  return train(run.train_x, labels, cfg.kind, t, report);
}

std::vector<NodeSet> reconstruct(const Model& m, const PreparedRun& run) {
  std::vector<NodeSet> out;
  if (run.query_x.rows == 0) return out;
  const auto p = predict_proba(m, run.query_x);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= m.threshold) out.push_back(run.query_pool.candidates[i]);
  }
  return out;
}

PipelineResult run_pipeline(const Hypergraph& train, const ProjectedGraph& query,
                            const PipelineConfig& cfg) {
  const auto run = prepare_run(train, query, cfg);
  PipelineResult r;
  r.model = fit_model(run, cfg);
  r.reconstruction = reconstruct(r.model, run);
  r.plan = run.plan;
  r.train_candidates = run.train_pool.size();
  r.train_positives = run.train_pool.positives();
  r.query_candidates = run.query_pool.size();
  r.training_recall = train.empty() ? 0.0 : run.plan.expected_yield / static_cast<double>(train.size());
  return r;
}

namespace {

using SetOfSets = std::unordered_set<NodeSet, NodeSetHash>;

SetOfSets canonical_set(std::span<const NodeSet> family) {
  SetOfSets out;
  for (NodeSet s : family) {
    canonicalize(s);
    out.insert(std::move(s));
  }
  return out;
}

}  // namespace

double jaccard(std::span<const NodeSet> truth, std::span<const NodeSet> predicted) {
  const auto a = canonical_set(truth);
  const auto b = canonical_set(predicted);
  std::size_t both = 0;
  for (const auto& s : b) both += a.count(s);
  const std::size_t either = a.size() + b.size() - both;
  return either == 0 ? 1.0 : static_cast<double>(both) / static_cast<double>(either);
}

EvaluationReport evaluate_partitioned(const Hypergraph& truth, std::span<const NodeSet> predicted) {
  return evaluate_partitioned(truth, predicted, maximal_cliques(project(truth)));
}

EvaluationReport evaluate_partitioned(const Hypergraph& truth, std::span<const NodeSet> predicted,
                                      const CliqueSet& m) {
  const auto r = canonical_set(predicted);
  const SetOfSets cliques(m.cliques.begin(), m.cliques.end());
  const auto nested = nested_hyperedges(truth);
  EvaluationReport out;
  out.truth_count = truth.size();
  out.predicted_count = r.size();
  std::size_t e1 = 0, e2 = 0, other = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const auto& e = truth[i];
    if (r.count(e)) {
      ++out.intersection;
    } else if (cliques.count(e)) {
      ++other;  // the maximal-clique baseline finds this one
    } else if (nested[i]) {
      ++e1;
    } else {
      ++e2;
    }
  }
  for (const auto& s : r) {
    if (truth.contains(s)) continue;
    if (cliques.count(s)) {
      ++e2;  // a maximal clique that is not a hyperedge
    } else {
      ++other;
    }
  }
  out.union_count = out.truth_count + out.predicted_count - out.intersection;
  if (out.union_count == 0) return out;
  const double u = static_cast<double>(out.union_count);
  out.jaccard = static_cast<double>(out.intersection) / u;
  out.error1_share = static_cast<double>(e1) / u;
  out.error2_share = static_cast<double>(e2) / u;
  out.other_share = static_cast<double>(other) / u;
  return out;
}

TuneResult tune_beta(const Hypergraph& train, const TuneOptions& options, const PipelineConfig& cfg) {
  if (options.betas.empty()) throw ValidationError("beta grid is empty");
  SplitOptions split;
  split.fraction = options.train_fraction;
  split.seed = derive_seed(cfg.seed, Stream::kTuning);
  const auto inner = split_dataset(train, split);
  const auto g1 = project(inner.query);
  auto betas = options.betas;
  std::sort(betas.begin(), betas.end());
  betas.erase(std::unique(betas.begin(), betas.end()), betas.end());
  std::vector<double> thresholds = options.thresholds;
  if (thresholds.empty()) thresholds.push_back(cfg.train.threshold);

  TuneResult result;
  double best = -1.0;
  for (auto beta : betas) {
    PipelineConfig c = cfg;
    c.beta = beta;
    const auto run = prepare_run(inner.train, g1, c);
    Model model = fit_model(run, c);
    const double recall = run.plan.expected_yield / static_cast<double>(inner.train.size());
    for (double t : thresholds) {
      model.threshold = t;
      const double score = jaccard(inner.query.hyperedges(), reconstruct(model, run));
      result.points.push_back({beta, t, score, recall});
      if (score > best) {
        best = score;
        result.beta = beta;
        result.threshold = t;
      }
    }
  }
  return result;
}

FeatureAblationResult feature_ablation(const Hypergraph& train, const Hypergraph& query,
                                       const PipelineConfig& cfg) {
  const auto run = prepare_run(train, project(query), cfg);
  FeatureAblationResult out;
  out.baseline_jaccard = jaccard(query.hyperedges(), reconstruct(fit_model(run, cfg), run));
  const auto names = feature_names(cfg.kind);
  for (std::size_t j = 0; j < names.size(); ++j) {
    PreparedRun ablated = run;
    for (auto* x : {&ablated.train_x, &ablated.query_x}) {
      for (std::size_t i = 0; i < x->rows; ++i) x->values[i * x->cols + j] = 0.0;
    }
    const double score = jaccard(query.hyperedges(), reconstruct(fit_model(ablated, cfg), ablated));
    out.ranking.push_back({j, names[j], score, out.baseline_jaccard - score});
  }
  std::stable_sort(out.ranking.begin(), out.ranking.end(),
                   [](const auto& a, const auto& b) { return a.drop > b.drop; });
  return out;
}

std::vector<SamplerComparison> compare_samplers(const Hypergraph& train, const Hypergraph& query,
                                                const PipelineConfig& cfg, bool with_reconstruction) {
  const auto g0 = project(train);
  const auto m0 = maximal_cliques(g0, cfg.clique_cap);
  const auto g1 = project(query);
  const auto m1 = maximal_cliques(g1, cfg.clique_cap);
  const auto plan = optimize_plan(rho_table(train, m0), cfg.beta);
  std::vector<SamplerComparison> out;
  for (auto choice : {SamplerChoice::kPlan, SamplerChoice::kHeadAndTail, SamplerChoice::kSmall,
                      SamplerChoice::kRandom}) {
    PipelineConfig c = cfg;
    c.sampler = choice;
    auto pool = draw_side(g1, m1, plan, c, 1);
    label_candidates(pool, query);
    SamplerComparison s;
    s.sampler = to_string(choice);
    s.candidates = pool.size();
    s.hits = pool.positives();
    s.recall = query.empty() ? 0.0 : static_cast<double>(s.hits) / static_cast<double>(query.size());
    if (with_reconstruction) {
      const auto run = prepare_run(train, g1, c);
      s.jaccard = jaccard(query.hyperedges(), reconstruct(fit_model(run, c), run));
    }
    out.push_back(std::move(s));
  }
  return out;
}

void to_json(nlohmann::json& j, const EvaluationReport& r) {
  j = {{"jaccard", r.jaccard},
       {"error1_share", r.error1_share},
       {"error2_share", r.error2_share},
       {"other_share", r.other_share},
       {"truth_count", r.truth_count},
       {"predicted_count", r.predicted_count},
       {"intersection", r.intersection},
       {"union_count", r.union_count}};
}

void to_json(nlohmann::json& j, const TuneResult& r) {
  auto points = nlohmann::json::array();
  for (const auto& p : r.points) {
    points.push_back({{"beta", p.beta},
                      {"threshold", p.threshold},
                      {"jaccard", p.jaccard},
                      {"training_recall", p.training_recall}});
  }
  j = {{"beta", r.beta}, {"threshold", r.threshold}, {"grid", points}};
}

void to_json(nlohmann::json& j, const FeatureAblationResult& r) {
  auto ranking = nlohmann::json::array();
  for (const auto& e : r.ranking) {
    ranking.push_back({{"index", e.index}, {"name", e.name}, {"jaccard", e.jaccard}, {"drop", e.drop}});
  }
  j = {{"baseline_jaccard", r.baseline_jaccard}, {"ranking", ranking}};
}

void to_json(nlohmann::json& j, const SamplerComparison& r) {
  j = {{"sampler", r.sampler}, {"candidates", r.candidates}, {"hits", r.hits}, {"recall", r.recall}};
  if (r.jaccard) j["jaccard"] = *r.jaccard;
}

}  // namespace hyperrecon
