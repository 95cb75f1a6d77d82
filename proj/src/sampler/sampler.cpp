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

#include "hyperrecon/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "hyperrecon/error.hpp"
#include "hyperrecon/random.hpp"

namespace hyperrecon {

namespace {

struct Column {
  std::vector<std::uint32_t> rows;  // available n, ascending
  double best_delta = 0.0;
  std::uint32_t best_n = 0;
};

}  // namespace

SamplerPlan optimize_plan(const RhoTable& t, std::uint64_t beta) {
  SamplerPlan plan;
  plan.beta = beta;
  if (beta == 0 || t.cells.empty()) return plan;

  std::map<std::uint32_t, Column> columns;
  std::uint32_t max_id = 0;
  for (const auto& [c, cell] : t.cells) {
    if (cell.q > 0.0) columns[c.k].rows.push_back(c.n);
    if (!cell.hyperedges.empty()) max_id = std::max(max_id, cell.hyperedges.back());
  }
  // A size-k hyperedge only ever appears in column k, so a single flag per
  // hyperedge serves as every column's Gamma_k.
  std::vector<bool> collected(static_cast<std::size_t>(max_id) + 1, false);

  auto update = [&](std::uint32_t k, Column& col) {
    col.best_delta = 0.0;
    col.best_n = 0;
    for (auto n : col.rows) {
      const auto& cell = t.cells.at({n, k});
      std::size_t fresh = 0;
      for (auto id : cell.hyperedges) fresh += !collected[id];
      const double delta = static_cast<double>(fresh) / cell.q;
      if (delta > col.best_delta) {
        col.best_delta = delta;
        col.best_n = n;
      }
    }
  };
  for (auto& [k, col] : columns) update(k, col);

  double remaining = static_cast<double>(beta);
  while (remaining > 0.0) {
    std::uint32_t pick_k = 0;
    double best = 0.0;
    for (const auto& [k, col] : columns) {
      if (col.best_delta > best) {
        best = col.best_delta;
        pick_k = k;
      }
    }
    if (best <= 0.0) break;
    auto& col = columns[pick_k];
    const CellIndex c{col.best_n, pick_k};
    const auto& cell = t.cells.at(c);
    plan.ratios[c] = std::min(1.0, remaining / cell.q);
    for (auto id : cell.hyperedges) collected[id] = true;
    col.rows.erase(std::find(col.rows.begin(), col.rows.end(), col.best_n));
    remaining -= cell.q;
    update(pick_k, col);
  }
  plan.expected_yield = expected_yield(plan, t);
  return plan;
}

double expected_yield(const SamplerPlan& plan, const RhoTable& t) {
  std::unordered_map<std::uint32_t, double> miss;
  for (const auto& [c, r] : plan.ratios) {
    if (r <= 0.0) continue;
    const auto* cell = t.find(c);
    if (!cell) continue;
    for (auto id : cell->hyperedges) {
      auto [it, fresh] = miss.try_emplace(id, 1.0);
      it->second *= 1.0 - r;
    }
  }
  double total = 0.0;
  for (const auto& [id, m] : miss) total += 1.0 - m;
  return total;
}

double planned_draws(const SamplerPlan& plan, const RhoTable& t) {
  double total = 0.0;
  for (const auto& [c, r] : plan.ratios) {
    if (const auto* cell = t.find(c)) total += r * cell->q;
  }
  return total;
}

std::size_t CandidateSet::positives() const {
  if (!labels) return 0;
  return static_cast<std::size_t>(std::count(labels->begin(), labels->end(), true));
}

namespace {

constexpr double kExactIndexLimit = 0x1.0p62;

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return static_cast<std::uint64_t>(c);
}

// The idx-th k-subset of `clique` in lexicographic order of positions.
NodeSet unrank(const NodeSet& clique, std::uint64_t k, std::uint64_t idx) {
  NodeSet out;
  out.reserve(k);
  const std::uint64_t n = clique.size();
  for (std::uint64_t i = 0; i < n && k > 0; ++i) {
    const std::uint64_t with = binomial_u64(n - 1 - i, k - 1);
    if (idx < with) {
      out.push_back(clique[i]);
      --k;
    } else {
      idx -= with;
    }
  }
  return out;
}

NodeSet random_subset(const NodeSet& clique, std::size_t k, Rng& rng) {
  // Floyd's algorithm over positions.
  std::unordered_set<std::size_t> chosen;
  const std::size_t n = clique.size();
  for (std::size_t j = n - k; j < n; ++j) {
    const std::size_t t = uniform_below(rng, j + 1);
    chosen.insert(chosen.count(t) ? j : t);
  }
  NodeSet out;
  for (auto p : chosen) out.push_back(clique[p]);
  std::sort(out.begin(), out.end());
  return out;
}

using Pool = std::unordered_map<NodeSet, std::vector<CellIndex>, NodeSetHash>;

void add(Pool& pool, NodeSet s, CellIndex c) {
  auto& cells = pool[std::move(s)];
  if (std::find(cells.begin(), cells.end(), c) == cells.end()) cells.push_back(c);
}

CandidateSet finish(Pool& pool) {
  std::vector<std::pair<NodeSet, std::vector<CellIndex>>> items;
  items.reserve(pool.size());
  for (auto& [s, cells] : pool) {
    std::sort(cells.begin(), cells.end());
    items.emplace_back(s, std::move(cells));
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  CandidateSet out;
  out.candidates.reserve(items.size());
  out.provenance.reserve(items.size());
  for (auto& [s, cells] : items) {
    out.candidates.push_back(std::move(s));
    out.provenance.push_back(std::move(cells));
  }
  return out;
}

void draw_from_clique(const NodeSet& clique, CellIndex c, double r, Rng& rng, Pool& pool) {
  const double total = binomial(c.n, c.k);
  if (total < kExactIndexLimit) {
    const std::uint64_t space = binomial_u64(c.n, c.k);
    std::uint64_t count = space;
    if (r < 1.0) {
      if (space <= 4096) {
        count = 0;
        for (std::uint64_t i = 0; i < space; ++i) count += uniform01(rng) < r;
      } else {
        count = std::binomial_distribution<std::uint64_t>(space, r)(rng);
      }
    }
    if (count == space) {
      for (std::uint64_t i = 0; i < space; ++i) add(pool, unrank(clique, c.k, i), c);
      return;
    }
    // Floyd's algorithm over subset indices: `count` distinct, uniform.
    std::unordered_set<std::uint64_t> chosen;
    for (std::uint64_t j = space - count; j < space; ++j) {
      const std::uint64_t t = uniform_below(rng, j + 1);
      chosen.insert(chosen.count(t) ? j : t);
    }
    std::vector<std::uint64_t> sorted(chosen.begin(), chosen.end());
    std::sort(sorted.begin(), sorted.end());
    for (auto i : sorted) add(pool, unrank(clique, c.k, i), c);
    return;
  }
  // Astronomically many subsets: the binomial is Poisson to any precision
  // that matters and rejection almost never fires.
  const auto count = std::poisson_distribution<std::uint64_t>(r * total)(rng);
  std::unordered_set<NodeSet, NodeSetHash> seen;
  while (seen.size() < count) {
    auto s = random_subset(clique, c.k, rng);
    if (seen.insert(s).second) add(pool, std::move(s), c);
  }
}

}  // namespace

CandidateSet draw_candidates(const ProjectedGraph& g, const CliqueSet& m,
                             const SamplerPlan& plan, std::uint64_t seed) {
  (void)g;
  Pool pool;
  for (const auto& [c, r] : plan.ratios) {
    if (r <= 0.0 || c.k == 0 || c.k > c.n) continue;
    auto it = m.by_size.find(c.n);
    if (it == m.by_size.end()) continue;
    const auto& ids = it->second;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(Stream::kSampler), c.n, c.k, i}));
      draw_from_clique(m.cliques[ids[i]], c, r, rng, pool);
    }
  }
  return finish(pool);
}

void label_candidates(CandidateSet& c, const Hypergraph& h) {
  std::vector<bool> labels(c.candidates.size());
  for (std::size_t i = 0; i < c.candidates.size(); ++i) labels[i] = h.contains(c.candidates[i]);
  c.labels = std::move(labels);
}

AblationKind parse_ablation_kind(const std::string& s) {
  if (s == "random") return AblationKind::kRandom;
  if (s == "small") return AblationKind::kSmall;
  if (s == "head_and_tail" || s == "head-and-tail" || s == "headtail") {
    return AblationKind::kHeadAndTail;
  }
  throw ValidationError("unknown ablation sampler: " + s);
}

std::string to_string(AblationKind k) {
  switch (k) {
    case AblationKind::kRandom: return "random";
    case AblationKind::kSmall: return "small";
    case AblationKind::kHeadAndTail: return "head_and_tail";
  }
  return "?";
}

CandidateSet ablation_sampler(const ProjectedGraph& g, const CliqueSet& m,
                              AblationKind kind, std::uint64_t beta,
                              std::uint64_t seed) {
  Pool pool;
  const std::size_t nodes = g.node_count();
  Rng rng(derive_seed(seed, {static_cast<std::uint64_t>(Stream::kAblation),
                             static_cast<std::uint64_t>(kind)}));
  const CellIndex none{0, 0};
  if (nodes == 0) return finish(pool);

  if (kind == AblationKind::kRandom) {
    const std::size_t top = std::max<std::size_t>(1, m.max_clique_size());
    NodeSet clique, common, next;
    for (std::uint64_t b = 0; b < beta; ++b) {
      const auto v = static_cast<NodeId>(uniform_below(rng, nodes));
      const auto target = 1 + uniform_below(rng, top);
      clique.assign(1, v);
      auto nb = g.neighbors(v);
      common.assign(nb.begin(), nb.end());
      while (clique.size() < target && !common.empty()) {
        const NodeId u = common[uniform_below(rng, common.size())];
        clique.push_back(u);
        auto nu = g.neighbors(u);
        next.clear();
        std::set_intersection(common.begin(), common.end(), nu.begin(), nu.end(),
                              std::back_inserter(next));
        common.swap(next);
      }
      NodeSet s = clique;
      std::sort(s.begin(), s.end());
      add(pool, std::move(s), none);
    }
    return finish(pool);
  }

  // Uniform draws with replacement from nodes, edges and, for head & tail,
  // the maximal cliques.
  const auto& edges = g.edges();
  const std::uint64_t tail = kind == AblationKind::kHeadAndTail ? m.size() : 0;
  const std::uint64_t space = nodes + edges.size() + tail;
  for (std::uint64_t b = 0; b < beta; ++b) {
    std::uint64_t i = uniform_below(rng, space);
    if (i < nodes) {
      add(pool, NodeSet{static_cast<NodeId>(i)}, none);
      continue;
    }
    i -= nodes;
    if (i < edges.size()) {
      add(pool, NodeSet{edges[i].first, edges[i].second}, none);
      continue;
    }
    add(pool, m.cliques[i - edges.size()], none);
  }
  return finish(pool);
}

void to_json(nlohmann::json& j, const SamplerPlan& p) {
  auto cells = nlohmann::json::array();
  for (const auto& [c, r] : p.ratios) cells.push_back({{"n", c.n}, {"k", c.k}, {"r", r}});
  j = {{"beta", p.beta}, {"cells", cells}, {"expected_yield", p.expected_yield}};
}

void from_json(const nlohmann::json& j, SamplerPlan& p) {
  p = SamplerPlan{};
  try {
    p.beta = j.at("beta").get<std::uint64_t>();
    for (const auto& c : j.at("cells")) {
      const CellIndex index{c.at("n").get<std::uint32_t>(), c.at("k").get<std::uint32_t>()};
      const double r = c.at("r").get<double>();
      if (!(r >= 0.0 && r <= 1.0) || index.k == 0 || index.k > index.n) {
        throw ValidationError("invalid sampler plan cell");
      }
      p.ratios[index] = r;
    }
    p.expected_yield = j.value("expected_yield", 0.0);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed sampler plan: ") + e.what());
  }
}

}  // namespace hyperrecon
