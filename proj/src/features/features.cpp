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

#include "hyperrecon/features.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "hyperrecon/error.hpp"

namespace hyperrecon {

std::size_t feature_dim(FeatureKind kind) {
  return kind == FeatureKind::kCount ? kCountFeatures : kMotifFeatures;
}

FeatureKind parse_feature_kind(const std::string& s) {
  if (s == "count") return FeatureKind::kCount;
  if (s == "motif") return FeatureKind::kMotif;
  throw ValidationError("unknown feature extractor: " + s);
}

std::string to_string(FeatureKind kind) {
  return kind == FeatureKind::kCount ? "count" : "motif";
}

std::vector<std::string> feature_names(FeatureKind kind) {
  if (kind == FeatureKind::kCount) {
    return {"size",
            "avg_degree",
            "avg_neighbor_degree",
            "avg_node_clique_degree",
            "avg_edge_clique_degree",
            "binarized_edge_degree",
            "avg_clustering",
            "avg_containing_clique_size"};
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= kMotifTypes; ++i) {
    for (const char* s : {"mean", "std", "min", "max"}) {
      names.push_back("motif" + std::to_string(i) + "_" + s);
    }
  }
  return names;
}

MotifContext::MotifContext(const ProjectedGraph& g, const CliqueSet& m)
    : graph_(&g), cliques_(&m), node_to_cliques_(g.node_count()) {
  for (std::size_t i = 0; i < m.cliques.size(); ++i) {
    for (NodeId v : m.cliques[i]) {
      if (v >= g.node_count()) throw ValidationError("clique node outside graph");
      node_to_cliques_[v].push_back(static_cast<std::uint32_t>(i));
    }
  }
}

std::array<double, 4> summarize(std::span<const double> p) {
  if (p.empty()) return {0.0, 0.0, 0.0, 0.0};
  double sum = 0.0, lo = p[0], hi = p[0];
  for (double x : p) {
    sum += x;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  const double mean = sum / static_cast<double>(p.size());
  double sq = 0.0;
  for (double x : p) sq += (x - mean) * (x - mean);
  return {mean, std::sqrt(sq / static_cast<double>(p.size())), lo, hi};
}

namespace {

// |x n y| > t for sorted x, y.
bool overlap_exceeds(const NodeSet& x, const NodeSet& y, std::size_t t) {
  std::size_t i = 0, j = 0, shared = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] < y[j]) {
      ++i;
    } else if (y[j] < x[i]) {
      ++j;
    } else {
      if (++shared > t) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

FeatureExtractor::FeatureExtractor(const MotifContext& ctx, FeatureKind kind)
    : ctx_(&ctx),
      kind_(kind),
      node_stats_(ctx.graph().node_count()),
      node_motifs_(ctx.graph().node_count()) {}

std::vector<double> FeatureExtractor::extract(const NodeSet& c) {
  std::vector<double> out(dim());
  extract_into(c, out);
  return out;
}

void FeatureExtractor::extract_into(const NodeSet& c, std::span<double> out) {
  if (out.size() != dim()) throw ValidationError("feature buffer has wrong length");
  if (c.empty()) throw ValidationError("cannot extract features of an empty clique");
  for (NodeId v : c) {
    if (v >= ctx_->graph().node_count()) throw ValidationError("clique node outside graph");
  }
  if (kind_ == FeatureKind::kCount) {
    count_into(c, out);
  } else {
    motif_into(c, out);
  }
}

const FeatureExtractor::NodeStats& FeatureExtractor::node_stats(NodeId v) {
  auto& slot = node_stats_[v];
  if (slot) return *slot;
  const auto& g = ctx_->graph();
  NodeStats s;
  auto nb = g.neighbors(v);
  s.degree = static_cast<double>(nb.size());
  s.clique_degree = static_cast<double>(ctx_->containing(v).size());
  if (!nb.empty()) {
    double total = 0.0;
    std::size_t links = 0;  // each neighbor-neighbor edge counted twice
    for (NodeId u : nb) {
      total += static_cast<double>(g.degree(u));
      auto nu = g.neighbors(u);
      std::size_t i = 0, j = 0;
      while (i < nb.size() && j < nu.size()) {
        if (nb[i] < nu[j]) {
          ++i;
        } else if (nu[j] < nb[i]) {
          ++j;
        } else {
          ++links;
          ++i;
          ++j;
        }
      }
    }
    s.mean_neighbor_degree = total / s.degree;
    if (nb.size() >= 2) s.clustering = static_cast<double>(links) / (s.degree * (s.degree - 1.0));
  }
  slot = s;
  return *slot;
}

std::size_t FeatureExtractor::shared_cliques(NodeId a, NodeId b) {
  auto x = ctx_->containing(a);
  auto y = ctx_->containing(b);
  std::size_t i = 0, j = 0, n = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] < y[j]) {
      ++i;
    } else if (y[j] < x[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

void FeatureExtractor::count_into(const NodeSet& c, std::span<double> out) {
  const double size = static_cast<double>(c.size());
  double degree = 0.0, nb_degree = 0.0, clique_degree = 0.0, clustering = 0.0;
  for (NodeId v : c) {
    const auto& s = node_stats(v);
    degree += s.degree;
    nb_degree += s.mean_neighbor_degree;
    clique_degree += s.clique_degree;
    clustering += s.clustering;
  }
  double edge_cliques = 0.0;
  bool all_multi = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const auto shared = shared_cliques(c[i], c[j]);
      edge_cliques += static_cast<double>(shared);
      all_multi = all_multi && shared > 1;
    }
  }
  // Maximal cliques holding all of C: filter the rarest node's list.
  NodeId rare = c[0];
  for (NodeId v : c) {
    if (ctx_->containing(v).size() < ctx_->containing(rare).size()) rare = v;
  }
  double holding = 0.0, holding_size = 0.0;
  for (auto id : ctx_->containing(rare)) {
    const auto& m = ctx_->cliques().cliques[id];
    if (is_subset(c, m)) {
      holding += 1.0;
      holding_size += static_cast<double>(m.size());
    }
  }
  out[0] = size;
  out[1] = degree / size;
  out[2] = nb_degree / size;
  out[3] = clique_degree / size;
  out[4] = edge_cliques / size;
  out[5] = all_multi ? 1.0 : 0.0;
  out[6] = clustering / size;
  out[7] = holding > 0.0 ? holding_size / holding : 0.0;
}

std::array<double, 3> FeatureExtractor::node_motifs(NodeId v) {
  auto& slot = node_motifs_[v];
  if (slot) return *slot;
  const auto& all = ctx_->cliques().cliques;
  auto ids = ctx_->containing(v);
  std::array<double, 3> t{static_cast<double>(ids.size()), 0.0, 0.0};
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      t[overlap_exceeds(all[ids[i]], all[ids[j]], 1) ? 2 : 1] += 1.0;
    }
  }
  slot = t;
  return t;
}

std::array<double, 10> FeatureExtractor::pair_motifs(NodeId a, NodeId b) {
  const auto key = pair_key(a, b);
  if (auto it = pair_motifs_.find(key); it != pair_motifs_.end()) return it->second;
  const auto& all = ctx_->cliques().cliques;
  auto x = ctx_->containing(a);
  auto y = ctx_->containing(b);
  std::vector<std::uint32_t> both, only_a, only_b;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(only_a));
  std::set_difference(y.begin(), y.end(), x.begin(), x.end(), std::back_inserter(only_b));

  // Index i holds type i + 4.
  std::array<double, 10> t{};
  t[0] = static_cast<double>(both.size());
  t[1] = static_cast<double>(only_a.size() + only_b.size());
  for (std::size_t i = 0; i < both.size(); ++i) {
    for (std::size_t j = i + 1; j < both.size(); ++j) {
      t[overlap_exceeds(all[both[i]], all[both[j]], 2) ? 3 : 2] += 1.0;
    }
  }
  for (auto m1 : both) {
    for (const auto* side : {&only_a, &only_b}) {
      for (auto m2 : *side) t[overlap_exceeds(all[m1], all[m2], 1) ? 5 : 4] += 1.0;
    }
  }
  for (const auto* side : {&only_a, &only_b}) {
    const auto& s = *side;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        t[overlap_exceeds(all[s[i]], all[s[j]], 1) ? 7 : 6] += 1.0;
      }
    }
  }
  for (auto m1 : only_a) {
    for (auto m2 : only_b) t[overlap_exceeds(all[m1], all[m2], 0) ? 9 : 8] += 1.0;
  }
  pair_motifs_.emplace(key, t);
  return t;
}

void FeatureExtractor::motif_into(const NodeSet& c, std::span<double> out) {
  std::vector<double> p;
  std::size_t o = 0;
  for (std::size_t type = 0; type < 3; ++type) {
    p.clear();
    for (NodeId v : c) p.push_back(node_motifs(v)[type]);
    for (double s : summarize(p)) out[o++] = s;
  }
  std::vector<std::array<double, 10>> pairs;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) pairs.push_back(pair_motifs(c[i], c[j]));
  }
  for (std::size_t type = 0; type < 10; ++type) {
    p.clear();
    for (const auto& t : pairs) p.push_back(t[type]);
    for (double s : summarize(p)) out[o++] = s;
  }
}

std::vector<double> count_features(const NodeSet& c, const MotifContext& ctx) {
  return FeatureExtractor(ctx, FeatureKind::kCount).extract(c);
}

std::vector<double> motif_features(const NodeSet& c, const MotifContext& ctx) {
  return FeatureExtractor(ctx, FeatureKind::kMotif).extract(c);
}

FeatureMatrix extract_matrix(const MotifContext& ctx, FeatureKind kind,
                             std::span<const NodeSet> cliques) {
  FeatureExtractor fx(ctx, kind);
  FeatureMatrix x;
  x.rows = cliques.size();
  x.cols = fx.dim();
  x.values.assign(x.rows * x.cols, 0.0);
  for (std::size_t i = 0; i < cliques.size(); ++i) fx.extract_into(cliques[i], x.row(i));
  return x;
}

void write_feature_csv(std::ostream& out, FeatureKind kind, const FeatureMatrix& x,
                       std::span<const NodeSet> cliques, const std::vector<bool>* labels) {
  const auto precision = out.precision(17);
  out << "nodes";
  if (labels) out << ",label";
  for (const auto& name : feature_names(kind)) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < cliques[i].size(); ++j) out << (j ? " " : "") << cliques[i][j];
    if (labels) out << ',' << ((*labels)[i] ? 1 : 0);
    for (double v : x.row(i)) out << ',' << v;
    out << '\n';
  }
  out.precision(precision);
}

}  // namespace hyperrecon
