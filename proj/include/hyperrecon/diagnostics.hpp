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

#ifndef HYPERRECON_DIAGNOSTICS_HPP_
#define HYPERRECON_DIAGNOSTICS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include <json.hpp>

#include "hyperrecon/cliques.hpp"
#include "hyperrecon/hypergraph.hpp"

namespace hyperrecon {

// n choose k as a double; exact while the result fits in 53 bits.
double binomial(std::size_t n, std::size_t k);

// How the maximal cliques of a hypergraph's projection miss its hyperedges.
// Error I counts nested hyperedges (never recoverable as maximal cliques);
// Error II counts the remaining disagreements between unnested hyperedges
// and maximal cliques. Both are shares of |E u M|, and
// error1 + error2 + jaccard_maxclique == 1.
struct ErrorReport {
  std::size_t e_total = 0;
  std::size_t e_unnested = 0;
  std::size_t m_total = 0;
  std::size_t e_and_m = 0;
  std::size_t e_or_m = 0;
  double error1 = 0.0;
  double error2 = 0.0;
  double jaccard_maxclique = 1.0;
};

ErrorReport error_partition(const Hypergraph& h);
ErrorReport error_partition(const Hypergraph& h, const CliqueSet& maximal);

struct CellIndex {
  std::uint32_t n = 0;  // maximal clique size
  std::uint32_t k = 0;  // subset size
  auto operator<=>(const CellIndex&) const = default;
};

struct RhoCell {
  // Ids (positions in the source hypergraph) of size-k hyperedges that lie
  // inside at least one size-n maximal clique. Sorted, unique.
  std::vector<std::uint32_t> hyperedges;
  // |Q_{n,k}| = (#size-n maximal cliques) * C(n, k).
  double q = 0.0;

  double rho_hat() const { return q > 0.0 ? hyperedges.size() / q : 0.0; }
};

// Per-(n, k) statistics of where hyperedges sit inside maximal cliques.
// Only cells with q > 0 are stored.
struct RhoTable {
  std::size_t max_clique_size = 0;
  std::map<CellIndex, RhoCell> cells;

  const RhoCell* find(CellIndex c) const {
    auto it = cells.find(c);
    return it == cells.end() ? nullptr : &it->second;
  }
};

RhoTable rho_table(const Hypergraph& h);
RhoTable rho_table(const Hypergraph& h, const CliqueSet& maximal);

// Mean squared difference of rho_hat over the union of both tables' cells;
// a cell missing from one table reads as 0.
double rho_distance(const RhoTable& a, const RhoTable& b);

// Columns: n,k,count_E,count_Q,rho_hat.
void write_rho_csv(std::ostream& out, const RhoTable& t);

struct PropertyVector {
  double e_count = 0.0;
  double mean_size = 0.0;
  double std_size = 0.0;  // population standard deviation
  double avg_node_degree = 0.0;
};

PropertyVector property_vector(const Hypergraph& h);
// For reconstructions: any family of node sets over `node_count` nodes.
PropertyVector property_vector(std::span<const NodeSet> hyperedges,
                               std::size_t node_count);

void to_json(nlohmann::json& j, const ErrorReport& r);
void to_json(nlohmann::json& j, const PropertyVector& p);

}  // namespace hyperrecon

#endif  // HYPERRECON_DIAGNOSTICS_HPP_
