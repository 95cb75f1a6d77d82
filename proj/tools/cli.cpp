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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperrecon/baselines.hpp"
#include "hyperrecon/classifier.hpp"
#include "hyperrecon/cliques.hpp"
#include "hyperrecon/diagnostics.hpp"
#include "hyperrecon/error.hpp"
#include "hyperrecon/features.hpp"
#include "hyperrecon/graph.hpp"
#include "hyperrecon/io.hpp"
#include "hyperrecon/pipeline.hpp"
#include "hyperrecon/random.hpp"
#include "hyperrecon/sampler.hpp"
#include "hyperrecon/structure.hpp"

namespace hyperrecon::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace

std::string sha256_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) throw Error("sha256 init failed");
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

namespace {

struct Options {
  std::uint64_t seed = 0;
  std::string out;
  std::string manifest;
  std::string format = "json";
  std::size_t clique_cap = kDefaultCliqueCap;

  // data
  std::string input, train, query, graph, truth, predicted;
  bool timestamped = false;
  std::string split = "random";
  double fraction = 0.5;
  std::optional<std::int64_t> cutoff;

  // pipeline
  std::uint64_t beta = 1000;
  std::string features = "count";
  std::size_t epochs = 2000;
  double learning_rate = 1e-4;
  std::size_t hidden = 100;
  double threshold = 0.5;
  bool no_class_weighting = false;
  std::string sampler = "plan";

  // command specific
  bool multiplicity = false;
  bool predicted_timestamped = false;
  std::string rho_csv, plan, plan_out, model, features_csv, reconstruction_out, method;
  double weight = 1.0;
  std::vector<std::uint64_t> betas;
  std::vector<double> thresholds;
  double train_fraction = 0.9;
  bool with_reconstruction = false;
};

class Manifest {
 public:
  Manifest(const std::string& command, const std::vector<std::string>& args, std::uint64_t seed) {
    j_ = {{"tool", "hyperrecon"},
          {"version", kVersion},
          {"command", command},
          {"args", args},
          {"seed", seed},
          {"inputs", json::array()},
          {"outputs", json::array()}};
  }
  void input(const std::string& path) {
    if (path.empty()) return;
    j_["inputs"].push_back({{"path", path}, {"sha256", sha256_file(path)}, {"bytes", fs::file_size(path)}});
  }
  void output(const std::string& path) {
    j_["outputs"].push_back({{"path", path}, {"sha256", sha256_file(path)}});
  }
  void set(const std::string& key, json value) { j_[key] = std::move(value); }
  const json& data() const { return j_; }

 private:
  json j_;
};

// Holds the command's state between parsing and execution.
class Runner {
 public:
  Runner(Options& o, std::ostream& out) : o_(o), out_(out) {}

  void start(const std::string& command, const std::vector<std::string>& args) {
    manifest_ = std::make_unique<Manifest>(command, args, o_.seed);
  }
  Manifest& manifest() { return *manifest_; }

  // Primary output: --out file or the output stream.
  void emit(const std::string& text) {
    if (o_.out.empty()) {
      out_ << text;
    } else {
      std::ofstream f(o_.out, std::ios::binary);
      if (!f) throw Error("cannot write " + o_.out);
      f << text;
      f.close();
      manifest_->output(o_.out);
    }
    finish();
  }

  void emit_json(const json& j) { emit(j.dump(2) + "\n"); }

  void write_side(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << text;
    f.close();
    manifest_->output(path);
  }

 private:
  void finish() {
    std::string path = o_.manifest;
    if (path.empty()) path = o_.out.empty() ? "hyperrecon.manifest.json" : o_.out + ".manifest.json";
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write " + path);
    f << manifest_->data().dump(2) << "\n";
  }

  Options& o_;
  std::ostream& out_;
  std::unique_ptr<Manifest> manifest_;
};

std::string hyperedge_text(std::span<const NodeSet> edges, const LabelMap& labels) {
  std::ostringstream s;
  write_hyperedges(s, edges, labels);
  return s.str();
}

LabeledHypergraph load_hypergraph(const std::string& path, bool timestamped, Manifest& m) {
  m.input(path);
  return read_hyperedge_file(path, {timestamped});
}

// Query side: either an edge list or a hyperedge file projected on the fly.
struct QueryInput {
  ProjectedGraph graph;
  LabelMap labels;
  std::optional<Hypergraph> truth;
};

QueryInput load_query(const Options& o, Manifest& m, bool with_multiplicity = false) {
  if (!o.graph.empty() == !o.query.empty()) throw UsageError("give exactly one of --graph or --query");
  QueryInput q;
  if (!o.graph.empty()) {
    m.input(o.graph);
    auto g = read_edge_file(o.graph);
    q.graph = std::move(g.graph);
    q.labels = std::move(g.labels);
  } else {
    auto h = load_hypergraph(o.query, o.timestamped, m);
    q.graph = project(h.hypergraph, with_multiplicity);
    q.labels = std::move(h.labels);
    q.truth = std::move(h.hypergraph);
  }
  return q;
}

// Training and query hypergraphs, from two files or from splitting one.
struct Pair {
  Hypergraph train;
  Hypergraph query;
  LabelMap train_labels;
  LabelMap query_labels;
};

Pair load_pair(const Options& o, Manifest& m) {
  Pair p;
  if (!o.input.empty()) {
    if (!o.train.empty() || !o.query.empty()) throw UsageError("--input excludes --train/--query");
    auto h = load_hypergraph(o.input, o.timestamped || o.split == "temporal", m);
    SplitOptions s;
    s.mode = o.split == "temporal" ? SplitMode::kTemporal : SplitMode::kRandom;
    s.fraction = o.fraction;
    s.cutoff = o.cutoff;
    s.seed = o.seed;
    auto r = split_dataset(h.hypergraph, s);
    auto relabel = [&](const std::vector<NodeId>& origin) {
      LabelMap l;
      for (auto v : origin) l.labels.push_back(h.labels.label(v));
      return l;
    };
    p.train_labels = relabel(r.train_origin);
    p.query_labels = relabel(r.query_origin);
    p.train = std::move(r.train);
    p.query = std::move(r.query);
    m.set("split", {{"mode", o.split}, {"fraction", o.fraction}, {"seed", o.seed},
                    {"cutoff", o.cutoff ? json(*o.cutoff) : json(nullptr)}});
    return p;
  }
  if (o.train.empty() || o.query.empty()) throw UsageError("give --train and --query, or --input");
  auto a = load_hypergraph(o.train, o.timestamped, m);
  auto b = load_hypergraph(o.query, o.timestamped, m);
  p.train = std::move(a.hypergraph);
  p.train_labels = std::move(a.labels);
  p.query = std::move(b.hypergraph);
  p.query_labels = std::move(b.labels);
  return p;
}

Hypergraph load_train_only(const Options& o, Manifest& m) {
  if (o.train.empty()) throw UsageError("--train is required");
  return load_hypergraph(o.train, o.timestamped, m).hypergraph;
}

PipelineConfig pipeline_config(const Options& o) {
  PipelineConfig c;
  c.beta = o.beta;
  c.kind = parse_feature_kind(o.features);
  c.train.epochs = o.epochs;
  c.train.learning_rate = o.learning_rate;
  c.train.hidden = o.hidden;
  c.train.threshold = o.threshold;
  c.train.class_weighting = !o.no_class_weighting;
  c.seed = o.seed;
  c.sampler = parse_sampler_choice(o.sampler);
  c.clique_cap = o.clique_cap;
  return c;
}

json seeds_json(std::uint64_t seed) {
  const auto sampler = static_cast<std::uint64_t>(Stream::kSampler);
  return {{"master", seed},
          {"sampler_train", derive_seed(seed, {sampler, 0})},
          {"sampler_query", derive_seed(seed, {sampler, 1})},
          {"init", derive_seed(seed, Stream::kInit)}};
}

std::string text_lines(const json& j) {
  std::ostringstream s;
  for (const auto& [k, v] : j.items()) {
    if (v.is_primitive()) s << k << ' ' << v.dump() << '\n';
  }
  return s.str();
}

// ---- commands ----

void cmd_project(Options& o, Runner& r) {
  auto h = load_hypergraph(o.input, o.timestamped, r.manifest());
  const auto g = project(h.hypergraph, o.multiplicity);
  std::ostringstream s;
  write_edges(s, g, h.labels);
  r.emit(s.str());
}

void cmd_analyze(Options& o, Runner& r) {
  auto h = load_hypergraph(o.input, o.timestamped, r.manifest());
  const auto& hg = h.hypergraph;
  const auto m = maximal_cliques(project(hg), o.clique_cap);
  const auto report = error_partition(hg, m);
  const auto rho = rho_table(hg, m);
  json j = report;
  j["nodes"] = hg.node_count();
  j["hyperedges"] = hg.size();
  j["duplicates_dropped"] = h.duplicates_dropped;
  j["maximal_cliques"] = m.size();
  j["max_clique_size"] = m.max_clique_size();
  j["sperner"] = is_sperner(hg);
  j["conformal"] = is_conformal(hg);
  j["properties"] = property_vector(hg);
  auto cells = json::array();
  for (const auto& [c, cell] : rho.cells) {
    cells.push_back({{"n", c.n}, {"k", c.k}, {"count_E", cell.hyperedges.size()},
                     {"count_Q", cell.q}, {"rho_hat", cell.rho_hat()}});
  }
  j["rho"] = cells;
  if (!o.rho_csv.empty()) {
    std::ostringstream csv;
    write_rho_csv(csv, rho);
    r.write_side(o.rho_csv, csv.str());
  }
  if (o.format == "text") {
    r.emit(text_lines(j));
  } else {
    r.emit_json(j);
  }
}

void cmd_optimize(Options& o, Runner& r) {
  const auto h = load_train_only(o, r.manifest());
  const auto m = maximal_cliques(project(h), o.clique_cap);
  const auto t = rho_table(h, m);
  const auto plan = optimize_plan(t, o.beta);
  json j = plan;
  j["planned_draws"] = planned_draws(plan, t);
  j["training_recall"] = h.empty() ? 0.0 : plan.expected_yield / static_cast<double>(h.size());
  r.emit_json(j);
}

SamplerPlan load_plan(const std::string& path, Manifest& m) {
  if (path.empty()) throw UsageError("--plan is required");
  m.input(path);
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in).get<SamplerPlan>();
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Model load_model(const std::string& path, Manifest& m) {
  if (path.empty()) throw UsageError("--model is required");
  m.input(path);
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in).get<Model>();
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void cmd_sample(Options& o, Runner& r) {
  auto q = load_query(o, r.manifest());
  auto cfg = pipeline_config(o);
  const auto m = maximal_cliques(q.graph, o.clique_cap);
  CandidateSet c;
  if (cfg.sampler == SamplerChoice::kPlan) {
    const auto plan = load_plan(o.plan, r.manifest());
    c = draw_candidates(q.graph, m, plan,
                        derive_seed(o.seed, {static_cast<std::uint64_t>(Stream::kSampler), 1}));
  } else {
    AblationKind kind = parse_ablation_kind(o.sampler);
    c = ablation_sampler(q.graph, m, kind, o.beta,
                         derive_seed(o.seed, {static_cast<std::uint64_t>(Stream::kAblation), 1}));
  }
  if (q.truth) label_candidates(c, *q.truth);
  if (!o.features_csv.empty()) {
    const auto x = extract_matrix(MotifContext(q.graph, m), cfg.kind, c.candidates);
    std::ostringstream csv;
    write_feature_csv(csv, cfg.kind, x, c.candidates, c.labels ? &*c.labels : nullptr);
    r.write_side(o.features_csv, csv.str());
  }
  r.manifest().set("candidates", c.size());
  if (c.labels) r.manifest().set("true_hyperedges", c.positives());
  r.emit(hyperedge_text(c.candidates, q.labels));
}

void cmd_train(Options& o, Runner& r) {
  const auto h = load_train_only(o, r.manifest());
  const auto cfg = pipeline_config(o);
  const auto run = prepare_training(h, cfg);
  TrainReport report;
  const auto model = fit_model(run, cfg, &report);
  if (!o.plan_out.empty()) r.write_side(o.plan_out, json(run.plan).dump(2) + "\n");
  r.manifest().set("seeds", seeds_json(o.seed));
  r.manifest().set("training", {{"candidates", run.train_pool.size()},
                                {"positives", report.positives},
                                {"negatives", report.negatives},
                                {"pos_weight", report.pos_weight},
                                {"final_loss", report.loss.empty() ? 0.0 : report.loss.back()}});
  r.emit_json(model);
}

void cmd_reconstruct(Options& o, Runner& r) {
  auto q = load_query(o, r.manifest());
  const auto model = load_model(o.model, r.manifest());
  PipelineConfig cfg = pipeline_config(o);
  cfg.kind = model.kind;
  cfg.sampler = SamplerChoice::kPlan;
  PreparedRun run;
  run.plan = load_plan(o.plan, r.manifest());
  prepare_query(run, q.graph, cfg);
  const auto out = reconstruct(model, run);
  r.manifest().set("candidates", run.query_pool.size());
  r.manifest().set("reconstructed", out.size());
  r.emit(hyperedge_text(out, q.labels));
}

void cmd_evaluate(Options& o, Runner& r) {
  auto truth = load_hypergraph(o.truth, o.timestamped, r.manifest());
  auto pred = load_hypergraph(o.predicted, o.predicted_timestamped, r.manifest());
  // Carry predicted labels into the truth's id space; unknown labels get
  // fresh ids and can never match.
  std::map<std::int64_t, NodeId> id;
  for (NodeId v = 0; v < truth.hypergraph.node_count(); ++v) id[truth.labels.label(v)] = v;
  NodeId next = static_cast<NodeId>(truth.hypergraph.node_count());
  std::vector<NodeSet> mapped;
  for (const auto& e : pred.hypergraph.hyperedges()) {
    NodeSet s;
    for (NodeId v : e) {
      auto [it, fresh] = id.try_emplace(pred.labels.label(v), next);
      if (fresh) ++next;
      s.push_back(it->second);
    }
    canonicalize(s);
    mapped.push_back(std::move(s));
  }
  const auto m = maximal_cliques(project(truth.hypergraph), o.clique_cap);
  json j = evaluate_partitioned(truth.hypergraph, mapped, m);
  if (o.format == "text") {
    r.emit(text_lines(j));
  } else {
    r.emit_json(j);
  }
}

void cmd_baseline(Options& o, Runner& r) {
  const bool multi = o.method == "multiplicity";
  auto q = load_query(o, r.manifest(), multi);
  std::vector<NodeSet> out;
  if (o.method == "maxclique") {
    out = baseline_max_clique(q.graph, o.clique_cap);
  } else if (o.method == "cover") {
    out = baseline_clique_cover(q.graph, o.seed);
  } else {
    out = baseline_multiplicity(q.graph, o.weight);
  }
  r.manifest().set("method", o.method);
  r.manifest().set("hyperedges", out.size());
  r.emit(hyperedge_text(out, q.labels));
}

void cmd_pipeline(Options& o, Runner& r) {
  const auto p = load_pair(o, r.manifest());
  const auto cfg = pipeline_config(o);
  const auto g1 = project(p.query);
  const auto result = run_pipeline(p.train, g1, cfg);
  const auto m1 = maximal_cliques(g1, o.clique_cap);
  const auto eval = evaluate_partitioned(p.query, result.reconstruction, m1);
  if (!o.reconstruction_out.empty()) {
    r.write_side(o.reconstruction_out, hyperedge_text(result.reconstruction, p.query_labels));
  }
  json j;
  j["jaccard"] = eval.jaccard;
  j["evaluation"] = eval;
  j["features"] = o.features;
  j["sampler"] = o.sampler;
  j["beta"] = o.beta;
  j["plan"] = result.plan;
  j["training_recall"] = result.training_recall;
  j["train_hyperedges"] = p.train.size();
  j["query_hyperedges"] = p.query.size();
  j["train_candidates"] = result.train_candidates;
  j["train_positives"] = result.train_positives;
  j["query_candidates"] = result.query_candidates;
  j["reconstructed"] = result.reconstruction.size();
  j["seeds"] = seeds_json(o.seed);
  r.manifest().set("seeds", seeds_json(o.seed));
  r.emit_json(j);
}

void cmd_tune(Options& o, Runner& r) {
  const auto h = load_train_only(o, r.manifest());
  TuneOptions t;
  t.betas = o.betas;
  t.thresholds = o.thresholds;
  t.train_fraction = o.train_fraction;
  json j = tune_beta(h, t, pipeline_config(o));
  r.emit_json(j);
}

void cmd_ablate_features(Options& o, Runner& r) {
  const auto p = load_pair(o, r.manifest());
  json j = feature_ablation(p.train, p.query, pipeline_config(o));
  j["features"] = o.features;
  r.emit_json(j);
}

void cmd_ablate_sampler(Options& o, Runner& r) {
  const auto p = load_pair(o, r.manifest());
  const auto cmp = compare_samplers(p.train, p.query, pipeline_config(o), o.with_reconstruction);
  json j = {{"beta", o.beta}, {"query_hyperedges", p.query.size()}, {"samplers", cmp}};
  r.emit_json(j);
}

void add_common(CLI::App* s, Options& o) {
  s->add_option("--seed", o.seed, "Master random seed");
  s->add_option("--out", o.out, "Output file (default: standard output)");
  s->add_option("--manifest", o.manifest, "Manifest path (default: <out>.manifest.json, or hyperrecon.manifest.json)");
  s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  s->add_option("--clique-cap", o.clique_cap, "Abort when maximal cliques exceed this count");
  s->add_flag("--timestamped", o.timestamped, "Hyperedge lines start with an integer timestamp");
}

void add_model_options(CLI::App* s, Options& o) {
  s->add_option("--beta", o.beta, "Sampling budget");
  s->add_option("--features", o.features, "Feature extractor")->check(CLI::IsMember({"count", "motif"}));
  s->add_option("--epochs", o.epochs, "Training epochs")->check(CLI::PositiveNumber);
  s->add_option("--learning-rate", o.learning_rate, "Adam learning rate")->check(CLI::PositiveNumber);
  s->add_option("--hidden", o.hidden, "Hidden units")->check(CLI::PositiveNumber);
  s->add_option("--threshold", o.threshold, "Decision threshold")->check(CLI::Range(0.0, 1.0));
  s->add_flag("--no-class-weighting", o.no_class_weighting, "Do not up-weight positives");
  s->add_option("--sampler", o.sampler, "Candidate sampler")
      ->check(CLI::IsMember({"plan", "random", "small", "head_and_tail"}));
}

void add_pair_options(CLI::App* s, Options& o) {
  s->add_option("--train", o.train, "Training hyperedge file");
  s->add_option("--query", o.query, "Query hyperedge file (ground truth)");
  s->add_option("--input", o.input, "Single hyperedge file to split");
  s->add_option("--split", o.split, "Split mode for --input")->check(CLI::IsMember({"random", "temporal"}));
  s->add_option("--fraction", o.fraction, "Training share for --input")->check(CLI::Range(0.0, 1.0));
  s->add_option("--cutoff", o.cutoff, "Temporal split: last training timestamp");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hypergraph reconstruction from pairwise projections", "hyperrecon"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::map<CLI::App*, void (*)(Options&, Runner&)> handlers;
  auto sub = [&](const char* name, const char* help, void (*fn)(Options&, Runner&)) {
    auto* s = app.add_subcommand(name, help);
    add_common(s, o);
    handlers[s] = fn;
    return s;
  };

  auto* s = sub("project", "Write the projected graph of a hyperedge file", cmd_project);
  s->add_option("input", o.input, "Hyperedge file")->required();
  s->add_flag("--multiplicity", o.multiplicity, "Write edge multiplicities");

  s = sub("analyze", "Maximal-clique errors and per-cell statistics", cmd_analyze);
  s->add_option("input", o.input, "Hyperedge file")->required();
  s->add_option("--rho-csv", o.rho_csv, "Write the per-cell table as CSV");

  s = sub("optimize-sampler", "Fit a sampling plan on training hyperedges", cmd_optimize);
  s->add_option("--train", o.train, "Training hyperedge file")->required();
  s->add_option("--beta", o.beta, "Sampling budget")->required();

  s = sub("sample", "Draw candidate cliques from a graph", cmd_sample);
  s->add_option("--graph", o.graph, "Edge list");
  s->add_option("--query", o.query, "Hyperedge file to project (also labels candidates)");
  s->add_option("--plan", o.plan, "Sampling plan JSON");
  s->add_option("--features-csv", o.features_csv, "Write candidate features as CSV");
  add_model_options(s, o);

  s = sub("train", "Fit the plan and the classifier on training hyperedges", cmd_train);
  s->add_option("--train", o.train, "Training hyperedge file")->required();
  s->add_option("--plan-out", o.plan_out, "Write the fitted plan here");
  add_model_options(s, o);

  s = sub("reconstruct", "Classify sampled candidates of a query graph", cmd_reconstruct);
  s->add_option("--graph", o.graph, "Edge list");
  s->add_option("--query", o.query, "Hyperedge file to project");
  s->add_option("--model", o.model, "Model JSON")->required();
  s->add_option("--plan", o.plan, "Sampling plan JSON")->required();

  s = sub("evaluate", "Compare a reconstruction with the truth", cmd_evaluate);
  s->add_option("truth", o.truth, "True hyperedge file")->required();
  s->add_option("predicted", o.predicted, "Reconstructed hyperedge file")->required();
  s->add_flag("--predicted-timestamped", o.predicted_timestamped, "Predicted lines carry timestamps too");

  s = sub("baseline", "Deterministic reconstruction baselines", cmd_baseline);
  s->add_option("method", o.method, "maxclique | cover | multiplicity")
      ->required()
      ->check(CLI::IsMember({"maxclique", "cover", "multiplicity"}));
  s->add_option("--graph", o.graph, "Edge list (weighted for multiplicity)");
  s->add_option("--query", o.query, "Hyperedge file to project");
  s->add_option("--weight", o.weight, "Multiplicity penalty weight");

  s = sub("pipeline", "Train on one hypergraph, reconstruct and score another", cmd_pipeline);
  add_pair_options(s, o);
  add_model_options(s, o);
  s->add_option("--reconstruction-out", o.reconstruction_out, "Write the reconstruction here");

  s = sub("tune-beta", "Pick the budget on a held-out slice of the training data", cmd_tune);
  s->add_option("--train", o.train, "Training hyperedge file")->required();
  s->add_option("--betas", o.betas, "Budget grid")->required()->delimiter(',');
  s->add_option("--thresholds", o.thresholds, "Threshold grid")->delimiter(',');
  s->add_option("--train-fraction", o.train_fraction, "Share kept for fitting")->check(CLI::Range(0.0, 1.0));
  add_model_options(s, o);

  s = sub("ablate-features", "Retrain with each feature zeroed in turn", cmd_ablate_features);
  add_pair_options(s, o);
  add_model_options(s, o);

  s = sub("ablate-sampler", "Compare the plan sampler with simple heuristics", cmd_ablate_sampler);
  add_pair_options(s, o);
  add_model_options(s, o);
  s->add_flag("--reconstruct", o.with_reconstruction, "Also train and score each sampler");

  auto fail = [&](const char* kind, const std::string& message, int code, const json& extra = {}) {
    json j = {{"error", kind}, {"message", message}};
    if (extra.is_object()) j.update(extra);
    err << j.dump() << std::endl;
    return code;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 2);
  }

  CLI::App* chosen = app.get_subcommands().front();
  Runner runner(o, out);
  try {
    runner.start(chosen->get_name(), args);
    handlers.at(chosen)(o, runner);
  } catch (const UsageError& e) {
    return fail("usage", e.what(), 2);
  } catch (const ParseError& e) {
    return fail("data", e.what(), 1, {{"line", e.line()}});
  } catch (const CliqueOverflowError& e) {
    return fail("data", e.what(), 1, {{"cap", e.cap()}});
  } catch (const Error& e) {
    return fail("data", e.what(), 1);
  } catch (const json::exception& e) {
    return fail("data", e.what(), 1);
  } catch (const fs::filesystem_error& e) {
    return fail("data", e.what(), 1);
  }
  return 0;
}

}  // namespace hyperrecon::cli
