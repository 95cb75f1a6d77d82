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

#ifndef HYPERRECON_STRUCTURE_HPP_
#define HYPERRECON_STRUCTURE_HPP_

#include <vector>

#include "hyperrecon/hypergraph.hpp"

namespace hyperrecon {

// nested[i] is true when hyperedge i is a proper subset of another one.
std::vector<bool> nested_hyperedges(const Hypergraph& h);

// No hyperedge is a proper subset of another.
bool is_sperner(const Hypergraph& h);

// Every maximal clique of the projection is a hyperedge. Nodes that belong
// to no hyperedge carry no structure and are ignored.
bool is_conformal(const Hypergraph& h);

// Conformality via hyperedge triples: for every three hyperedges, the union
// of their pairwise intersections lies inside some hyperedge. Cubic in the
// number of hyperedges.
bool is_conformal_triangle(const Hypergraph& h);

}  // namespace hyperrecon

#endif  // HYPERRECON_STRUCTURE_HPP_
