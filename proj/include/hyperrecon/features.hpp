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

#ifndef HYPERRECON_FEATURES_HPP_
#define HYPERRECON_FEATURES_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperrecon/cliques.hpp"
#include "hyperrecon/graph.hpp"
#include "hyperrecon/hypergraph.hpp"

namespace hyperrecon {

enum class FeatureKind { kCount, kMotif };

inline constexpr std::size_t kCountFeatures = 8;
inline constexpr std::size_t kMotifTypes = 13;
inline constexpr std::size_t kMotifFeatures = 4 * kMotifTypes;

std::size_t feature_dim(FeatureKind kind);
FeatureKind parse_feature_kind(const std::string& s);
std::string to_string(FeatureKind kind);
std::vector<std::string> feature_names(FeatureKind kind);

// Graph plus its maximal cliques and a node -> containing cliques index.
// Holds references; both must outlive the context.
class MotifContext {
 public:
  MotifContext(const ProjectedGraph& g, const CliqueSet& m);

  const ProjectedGraph& graph() const { return *graph_; }
  const CliqueSet& cliques() const { return *cliques_; }
  // Positions in cliques().cliques of the maximal cliques containing v.
  std::span<const std::uint32_t> containing(NodeId v) const { return node_to_cliques_[v]; }

 private:
  const ProjectedGraph* graph_;
  const CliqueSet* cliques_;
  std::vector<std::vector<std::uint32_t>> node_to_cliques_;
};

// [mean, std, min, max] with population std; empty input gives zeros.
std::array<double, 4> summarize(std::span<const double> p);

// Clique motifs. Every motif joins one node v, or one pair {a, b}, of the
// target clique with one or two maximal cliques that contain at least one
// of those nodes. Cliques are told apart by which of the nodes they hold
// and by how they intersect:
//
//   single node v                      pair {a, b}; "ab" holds both,
//   1  v-M                             "a" holds a only, "b" b only
//   2  M1-v-M2, M1 n M2 = {v}          4   ab                 5  a (or b)
//   3  M1-v-M2, |M1 n M2| >= 2         6   ab,ab  meet in {a,b} exactly
//                                      7   ab,ab  share more
//                                      8   ab,a   meet in {a} exactly
//                                      9   ab,a   share more
//                                      10  a,a    meet in {a} exactly
//                                      11  a,a    share more
//                                      12  a,b    disjoint
//                                      13  a,b    intersecting
//
// Types 5 and 8..11 count both orientations. For types 1..3 the
// distribution runs over the nodes of C, for 4..13 over unordered pairs.

// Per-clique feature computation with node and pair caches. Not thread
// safe; use one extractor per thread.
class FeatureExtractor {
 public:
  FeatureExtractor(const MotifContext& ctx, FeatureKind kind);

  FeatureKind kind() const { return kind_; }
  std::size_t dim() const { return feature_dim(kind_); }

  // `c` must be sorted and a clique of the context graph.
  std::vector<double> extract(const NodeSet& c);
  void extract_into(const NodeSet& c, std::span<double> out);

  // Raw motif counts for one node (types 1..3) and one pair (4..13).
  std::array<double, 3> node_motifs(NodeId v);
  std::array<double, 10> pair_motifs(NodeId a, NodeId b);

 private:
  struct NodeStats {
    double degree = 0.0;
    double mean_neighbor_degree = 0.0;
    double clique_degree = 0.0;
    double clustering = 0.0;
  };

  void count_into(const NodeSet& c, std::span<double> out);
  void motif_into(const NodeSet& c, std::span<double> out);
  const NodeStats& node_stats(NodeId v);
  std::size_t shared_cliques(NodeId a, NodeId b);

  const MotifContext* ctx_;
  FeatureKind kind_;
  std::vector<std::optional<NodeStats>> node_stats_;
  std::vector<std::optional<std::array<double, 3>>> node_motifs_;
  std::unordered_map<std::uint64_t, std::array<double, 10>> pair_motifs_;
};

std::vector<double> count_features(const NodeSet& c, const MotifContext& ctx);
std::vector<double> motif_features(const NodeSet& c, const MotifContext& ctx);

// Row-major matrix, one row per clique.
struct FeatureMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  std::span<const double> row(std::size_t i) const {
    return {values.data() + i * cols, cols};
  }
  std::span<double> row(std::size_t i) { return {values.data() + i * cols, cols}; }
};

FeatureMatrix extract_matrix(const MotifContext& ctx, FeatureKind kind,
                             std::span<const NodeSet> cliques);

// One row per clique: nodes (space separated), optional label, features.
void write_feature_csv(std::ostream& out, FeatureKind kind, const FeatureMatrix& x,
                       std::span<const NodeSet> cliques,
                       const std::vector<bool>* labels = nullptr);

}  // namespace hyperrecon

#endif  // HYPERRECON_FEATURES_HPP_
