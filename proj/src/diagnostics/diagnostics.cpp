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

#include "hyperrecon/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <set>

#include "hyperrecon/graph.hpp"
#include "hyperrecon/structure.hpp"

namespace hyperrecon {

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return c > 0x1.0p53 ? c : std::round(c);
}

ErrorReport error_partition(const Hypergraph& h) {
  return error_partition(h, maximal_cliques(project(h)));
}

ErrorReport error_partition(const Hypergraph& h, const CliqueSet& maximal) {
  ErrorReport r;
  r.e_total = h.size();
  const auto nested = nested_hyperedges(h);
  r.e_unnested = static_cast<std::size_t>(std::count(nested.begin(), nested.end(), false));
  r.m_total = maximal.size();
  for (const auto& c : maximal.cliques) {
    if (h.contains(c)) ++r.e_and_m;
  }
  r.e_or_m = r.e_total + r.m_total - r.e_and_m;
  if (r.e_or_m == 0) return r;
  // A nested hyperedge is a non-maximal clique, so E n M == E' n M.
  const double denom = static_cast<double>(r.e_or_m);
  r.error1 = static_cast<double>(r.e_total - r.e_unnested) / denom;
  r.error2 = static_cast<double>((r.m_total - r.e_and_m) + (r.e_unnested - r.e_and_m)) / denom;
  r.jaccard_maxclique = static_cast<double>(r.e_and_m) / denom;
  return r;
}

RhoTable rho_table(const Hypergraph& h) {
  return rho_table(h, maximal_cliques(project(h)));
}

RhoTable rho_table(const Hypergraph& h, const CliqueSet& maximal) {
  RhoTable t;
  t.max_clique_size = maximal.max_clique_size();
  for (const auto& [n, members] : maximal.by_size) {
    const double count = static_cast<double>(members.size());
    for (std::size_t k = 1; k <= n; ++k) {
      auto& cell = t.cells[{static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k)}];
      cell.q = count * binomial(n, k);
    }
  }
  // Only hyperedges touching a clique's nodes can lie inside it, which keeps
  // the matching proportional to clique size times node degree.
  std::vector<std::uint32_t> touching;
  for (const auto& c : maximal.cliques) {
    touching.clear();
    for (NodeId v : c) {
      auto inc = h.incident(v);
      touching.insert(touching.end(), inc.begin(), inc.end());
    }
    std::sort(touching.begin(), touching.end());
    touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
    const auto n = static_cast<std::uint32_t>(c.size());
    for (auto id : touching) {
      const auto& e = h[id];
      if (is_subset(e, c)) {
        t.cells[{n, static_cast<std::uint32_t>(e.size())}].hyperedges.push_back(id);
      }
    }
  }
  for (auto& [index, cell] : t.cells) {
    auto& ids = cell.hyperedges;
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }
  return t;
}

double rho_distance(const RhoTable& a, const RhoTable& b) {
  std::set<CellIndex> keys;
  for (const auto& [c, cell] : a.cells) keys.insert(c);
  for (const auto& [c, cell] : b.cells) keys.insert(c);
  if (keys.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& c : keys) {
    const auto* x = a.find(c);
    const auto* y = b.find(c);
    const double d = (x ? x->rho_hat() : 0.0) - (y ? y->rho_hat() : 0.0);
    sum += d * d;
  }
  return sum / static_cast<double>(keys.size());
}

void write_rho_csv(std::ostream& out, const RhoTable& t) {
  out << "n,k,count_E,count_Q,rho_hat\n";
  for (const auto& [c, cell] : t.cells) {
    out << c.n << ',' << c.k << ',' << cell.hyperedges.size() << ',';
    if (cell.q < 0x1.0p53) {
      out << static_cast<std::uint64_t>(cell.q);
    } else {
      out << std::setprecision(17) << cell.q << std::setprecision(6);
    }
    out << ',' << std::setprecision(17) << cell.rho_hat() << std::setprecision(6) << '\n';
  }
}

PropertyVector property_vector(const Hypergraph& h) {
  return property_vector(h.hyperedges(), h.node_count());
}

PropertyVector property_vector(std::span<const NodeSet> hyperedges,
                               std::size_t node_count) {
  PropertyVector p;
  p.e_count = static_cast<double>(hyperedges.size());
  if (hyperedges.empty()) return p;
  double total = 0.0;
  for (const auto& e : hyperedges) total += static_cast<double>(e.size());
  p.mean_size = total / p.e_count;
  double sq = 0.0;
  for (const auto& e : hyperedges) {
    const double d = static_cast<double>(e.size()) - p.mean_size;
    sq += d * d;
  }
  p.std_size = std::sqrt(sq / p.e_count);
  p.avg_node_degree = node_count > 0 ? total / static_cast<double>(node_count) : 0.0;
  return p;
}

void to_json(nlohmann::json& j, const ErrorReport& r) {
  j = {{"e_total", r.e_total},
       {"e_unnested", r.e_unnested},
       {"m_total", r.m_total},
       {"e_and_m", r.e_and_m},
       {"e_or_m", r.e_or_m},
       {"error1", r.error1},
       {"error2", r.error2},
       {"jaccard_maxclique", r.jaccard_maxclique}};
}

void to_json(nlohmann::json& j, const PropertyVector& p) {
  j = {{"e_count", p.e_count},
       {"mean_size", p.mean_size},
       {"std_size", p.std_size},
       {"avg_node_degree", p.avg_node_degree}};
}

}  // namespace hyperrecon
