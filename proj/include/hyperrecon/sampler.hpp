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

#ifndef HYPERRECON_SAMPLER_HPP_
#define HYPERRECON_SAMPLER_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperrecon/cliques.hpp"
#include "hyperrecon/diagnostics.hpp"
#include "hyperrecon/graph.hpp"
#include "hyperrecon/hypergraph.hpp"

namespace hyperrecon {

// Per-cell sampling ratios under a draw budget. Cells absent from `ratios`
// have r = 0.
struct SamplerPlan {
  std::uint64_t beta = 0;
  std::map<CellIndex, double> ratios;
  double expected_yield = 0.0;

  double ratio(CellIndex c) const {
    auto it = ratios.find(c);
    return it == ratios.end() ? 0.0 : it->second;
  }
};

// Greedy budgeted plan. Picks, among all columns k, the cell (n, k) whose
// not-yet-covered column-k hyperedges per unit of |Q_{n,k}| is largest;
// ties go to the smaller k, then the smaller n. Stops when the budget is
// spent or nothing new can be collected.
SamplerPlan optimize_plan(const RhoTable& t, std::uint64_t beta);

// Expected number of distinct hyperedges collected when each cell keeps
// each of its hyperedges independently with probability r.
double expected_yield(const SamplerPlan& plan, const RhoTable& t);

// Sum of r * |Q| over the plan's cells.
double planned_draws(const SamplerPlan& plan, const RhoTable& t);

struct CandidateSet {
  std::vector<NodeSet> candidates;              // sorted, distinct
  std::vector<std::vector<CellIndex>> provenance;  // source cells per candidate
  std::optional<std::vector<bool>> labels;      // true hyperedge?

  std::size_t size() const { return candidates.size(); }
  bool empty() const { return candidates.empty(); }
  std::size_t positives() const;
};

// Keeps every (size-n maximal clique, size-k subset) pair independently
// with probability r_{n,k}, then merges repeats. Each clique draws from its
// own stream, derived from (seed, n, k, clique index).
CandidateSet draw_candidates(const ProjectedGraph& g, const CliqueSet& m,
                             const SamplerPlan& plan, std::uint64_t seed);

// Fills `labels` from membership in h.
void label_candidates(CandidateSet& c, const Hypergraph& h);

enum class AblationKind { kRandom, kSmall, kHeadAndTail };

AblationKind parse_ablation_kind(const std::string& s);
std::string to_string(AblationKind k);

CandidateSet ablation_sampler(const ProjectedGraph& g, const CliqueSet& m,
                              AblationKind kind, std::uint64_t beta,
                              std::uint64_t seed);

void to_json(nlohmann::json& j, const SamplerPlan& p);
void from_json(const nlohmann::json& j, SamplerPlan& p);

}  // namespace hyperrecon

#endif  // HYPERRECON_SAMPLER_HPP_
