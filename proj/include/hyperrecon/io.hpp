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

#ifndef HYPERRECON_IO_HPP_
#define HYPERRECON_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hyperrecon/graph.hpp"
#include "hyperrecon/hypergraph.hpp"

namespace hyperrecon {

// Maps dense internal ids back to the labels found in the input file.
// Labels are assigned dense ids in ascending label order.
struct LabelMap {
  std::vector<std::int64_t> labels;

  std::int64_t label(NodeId v) const { return labels.empty() ? v : labels[v]; }
  static LabelMap identity(std::size_t n);
};

struct LabeledHypergraph {
  Hypergraph hypergraph;
  LabelMap labels;
  std::size_t duplicates_dropped = 0;
};

struct LabeledGraph {
  ProjectedGraph graph;
  LabelMap labels;
};

struct HyperedgeReadOptions {
  // First column of every line is an integer timestamp.
  bool timestamped = false;
};

// One hyperedge per line, whitespace-separated integer node ids. Lines that
// are blank or start with '#' are skipped. Repeated hyperedges are dropped
// and counted. Throws ParseError with the offending line number.
LabeledHypergraph read_hyperedges(std::istream& in, const std::string& source,
                                  HyperedgeReadOptions options = {});
LabeledHypergraph read_hyperedge_file(const std::filesystem::path& path,
                                      HyperedgeReadOptions options = {});

void write_hyperedges(std::ostream& out, std::span<const NodeSet> hyperedges,
                      const LabelMap& labels = {});
void write_hyperedge_file(const std::filesystem::path& path,
                          std::span<const NodeSet> hyperedges,
                          const LabelMap& labels = {});

// "u v" or "u v w" per line (w a positive multiplicity). A line holding a
// single id declares an isolated node. Either every edge line carries a
// weight or none does.
LabeledGraph read_edges(std::istream& in, const std::string& source);
LabeledGraph read_edge_file(const std::filesystem::path& path);

// Writes edges (with weights when the graph has multiplicities) followed by
// one line per isolated node.
void write_edges(std::ostream& out, const ProjectedGraph& g,
                 const LabelMap& labels = {});
void write_edge_file(const std::filesystem::path& path, const ProjectedGraph& g,
                     const LabelMap& labels = {});

}  // namespace hyperrecon

#endif  // HYPERRECON_IO_HPP_
