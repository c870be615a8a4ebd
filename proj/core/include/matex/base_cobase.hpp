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

#ifndef MATEX_BASE_COBASE_HPP_
#define MATEX_BASE_COBASE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "matex/element_set.hpp"
#include "matex/exchange.hpp"
#include "matex/matroid.hpp"

namespace matex {

// Vertices are the bases whose complement is also a base, in increasing
// lexicographic order; edges join vertices with symmetric difference two.
class BaseCobaseGraph {
 public:
  BaseCobaseGraph(std::shared_ptr<const Matroid> block, std::vector<ElementSet> vertices);

  const Matroid& block() const { return *block_; }
  const std::shared_ptr<const Matroid>& block_ptr() const { return block_; }
  std::size_t rank() const { return block_->rank(); }

  const std::vector<ElementSet>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return adjacency_[v]; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> index_of(const ElementSet& vertex) const;

 private:
  std::shared_ptr<const Matroid> block_;
  std::vector<ElementSet> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Throws NotBlockError (with the reason) unless the ground set is the
// disjoint union of two bases.
BaseCobaseGraph build_graph(std::shared_ptr<const Matroid> m);

// Hop distances from `source`; unreachable vertices get nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const BaseCobaseGraph& g,
                                                      std::size_t source);

// Largest eccentricity, or nullopt when the graph is disconnected. Throws
// PreconditionError on an empty graph.
std::optional<std::size_t> diameter(const BaseCobaseGraph& g);
bool is_connected(const BaseCobaseGraph& g);

struct ComponentSummary {
  std::vector<std::size_t> vertices;
  std::size_t diameter = 0;
};
// Connected components in order of their smallest vertex index.
std::vector<ComponentSummary> components(const BaseCobaseGraph& g);

// Vertex lines "v <index>: <labels>" then edge lines "e <u> <v>".
void write_adjacency(std::ostream& out, const BaseCobaseGraph& g);

// The 2n elements of A and B with all of A first, such that every n
// consecutive elements (cyclically) form a base.
struct CyclicOrder {
  std::vector<ElementId> sequence;
  friend bool operator==(const CyclicOrder&, const CyclicOrder&) = default;
};

bool verify_cyclic_order(const BasePair& p, const CyclicOrder& order);

// Backtracking search in lexicographic order, pruning on every completed
// window. nullopt means no cyclic order exists for this pair. Throws
// BudgetExhausted past the budget (counted in window checks).
std::optional<CyclicOrder> find_cyclic_order(const BasePair& p, SearchBudget budget = {});

// a_1..a_n b_1..b_n from a full serial symmetric exchange. Throws
// PreconditionError if seq is short or invalid.
CyclicOrder serial_to_cyclic(const BasePair& p, const ExchangeSequence& seq);

}  // namespace matex

#endif  // MATEX_BASE_COBASE_HPP_
