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

#include "hyperrecon/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "hyperrecon/error.hpp"

namespace hyperrecon {

LabelMap LabelMap::identity(std::size_t n) {
  LabelMap m;
  m.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) m.labels[i] = static_cast<std::int64_t>(i);
  return m;
}

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<std::int64_t> parse_integers(const std::string& line,
                                         const std::string& source,
                                         std::size_t line_no) {
  std::vector<std::int64_t> values;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r' || *p == ',')) ++p;
    if (p == end) break;
    std::int64_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() ||
        (next < end && *next != ' ' && *next != '\t' && *next != '\r' &&
         *next != ',')) {
      auto stop = std::find_if(p, end, [](char c) {
        return c == ' ' || c == '\t' || c == '\r';
      });
      throw ParseError(source, line_no,
                       "not an integer: '" + std::string(p, stop) + "'");
    }
    values.push_back(v);
    p = next;
  }
  return values;
}

// Dense ids in ascending label order.
std::unordered_map<std::int64_t, NodeId> densify(std::vector<std::int64_t> all,
                                                 LabelMap& labels) {
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::unordered_map<std::int64_t, NodeId> id;
  id.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) id.emplace(all[i], static_cast<NodeId>(i));
  labels.labels = std::move(all);
  return id;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

}  // namespace

LabeledHypergraph read_hyperedges(std::istream& in, const std::string& source,
                                  HyperedgeReadOptions options) {
  std::vector<std::vector<std::int64_t>> raw;
  std::vector<std::int64_t> times;
  std::vector<std::int64_t> all;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto values = parse_integers(line, source, line_no);
    if (options.timestamped) {
      if (values.size() < 2) {
        throw ParseError(source, line_no, "expected a timestamp and at least one node");
      }
      times.push_back(values.front());
      values.erase(values.begin());
    }
    all.insert(all.end(), values.begin(), values.end());
    raw.push_back(std::move(values));
  }
  LabeledHypergraph out;
  auto id = densify(std::move(all), out.labels);
  std::vector<NodeSet> edges;
  edges.reserve(raw.size());
  for (const auto& r : raw) {
    NodeSet e;
    e.reserve(r.size());
    for (auto label : r) e.push_back(id.at(label));
    edges.push_back(std::move(e));
  }
  out.hypergraph = Hypergraph::deduplicated(out.labels.labels.size(), std::move(edges),
                                            std::move(times), &out.duplicates_dropped);
  return out;
}

LabeledHypergraph read_hyperedge_file(const std::filesystem::path& path,
                                      HyperedgeReadOptions options) {
  auto in = open_input(path);
  return read_hyperedges(in, path.string(), options);
}

void write_hyperedges(std::ostream& out, std::span<const NodeSet> hyperedges,
                      const LabelMap& labels) {
  for (const auto& e : hyperedges) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0) out << ' ';
      out << labels.label(e[i]);
    }
    out << '\n';
  }
}

void write_hyperedge_file(const std::filesystem::path& path,
                          std::span<const NodeSet> hyperedges,
                          const LabelMap& labels) {
  auto out = open_output(path);
  write_hyperedges(out, hyperedges, labels);
}

LabeledGraph read_edges(std::istream& in, const std::string& source) {
  struct RawEdge {
    std::int64_t u;
    std::int64_t v;
    std::int64_t w;
  };
  std::vector<RawEdge> raw;
  std::vector<std::int64_t> all;
  std::string line;
  std::size_t line_no = 0;
  int weighted = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    auto values = parse_integers(line, source, line_no);
    if (values.size() == 1) {
      all.push_back(values[0]);
      continue;
    }
    if (values.size() != 2 && values.size() != 3) {
      throw ParseError(source, line_no, "expected 'u v' or 'u v w'");
    }
    const int has_weight = values.size() == 3 ? 1 : 0;
    if (weighted == -1) weighted = has_weight;
    if (weighted != has_weight) {
      throw ParseError(source, line_no, "mixed weighted and unweighted edges");
    }
    if (values[0] == values[1]) throw ParseError(source, line_no, "self-loop");
    if (has_weight && values[2] <= 0) {
      throw ParseError(source, line_no, "multiplicity must be a positive integer");
    }
    raw.push_back({values[0], values[1], has_weight ? values[2] : 1});
    all.push_back(values[0]);
    all.push_back(values[1]);
  }
  LabeledGraph out;
  auto id = densify(std::move(all), out.labels);
  std::vector<Edge> edges;
  std::vector<std::uint32_t> weights;
  edges.reserve(raw.size());
  for (const auto& r : raw) {
    edges.emplace_back(id.at(r.u), id.at(r.v));
    weights.push_back(static_cast<std::uint32_t>(r.w));
  }
  if (weighted == 1) {
    out.graph = ProjectedGraph(out.labels.labels.size(), std::move(edges), std::move(weights));
  } else {
    out.graph = ProjectedGraph(out.labels.labels.size(), std::move(edges));
  }
  return out;
}

LabeledGraph read_edge_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_edges(in, path.string());
}

void write_edges(std::ostream& out, const ProjectedGraph& g, const LabelMap& labels) {
  const bool weighted = g.has_multiplicity();
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out << labels.label(edges[i].first) << ' ' << labels.label(edges[i].second);
    if (weighted) out << ' ' << g.multiplicities()[i];
    out << '\n';
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 0) out << labels.label(v) << '\n';
  }
}

void write_edge_file(const std::filesystem::path& path, const ProjectedGraph& g,
                     const LabelMap& labels) {
  auto out = open_output(path);
  write_edges(out, g, labels);
}

}  // namespace hyperrecon
