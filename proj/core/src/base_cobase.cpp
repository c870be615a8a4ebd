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

#include "matex/base_cobase.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "matex/errors.hpp"

namespace matex {

BaseCobaseGraph::BaseCobaseGraph(std::shared_ptr<const Matroid> block,
                                 std::vector<ElementSet> vertices)
    : block_(std::move(block)), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  adjacency_.resize(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
      if ((vertices_[i] ^ vertices_[j]).size() == 2) {
        edges_.emplace_back(i, j);
        adjacency_[i].push_back(j);
        adjacency_[j].push_back(i);
      }
    }
  }
}

std::optional<std::size_t> BaseCobaseGraph::index_of(const ElementSet& vertex) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), vertex);
  if (it == vertices_.end() || *it != vertex) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

namespace {

// Chooses, element by element, whether each id joins the base or its
// complement; both partial sides must stay independent.
class VertexEnumerator {
 public:
  explicit VertexEnumerator(const Matroid& m)
      : m_(m), rank_(m.rank()), ground_(m.ground_size()) {}

  std::vector<ElementSet> run() {
    descend(0, {}, {});
    return std::move(found_);
  }

 private:
  void descend(ElementId next, const ElementSet& inside, const ElementSet& outside) {
    if (next == ground_) {
      found_.push_back(inside);
      return;
    }
    if (inside.size() < rank_) {
      ElementSet grown = inside.with(next);
      if (m_.is_independent(grown)) descend(next + 1, grown, outside);
    }
    if (outside.size() < rank_) {
      ElementSet grown = outside.with(next);
      if (m_.is_independent(grown)) descend(next + 1, inside, grown);
    }
  }

  const Matroid& m_;
  std::size_t rank_;
  std::size_t ground_;
  std::vector<ElementSet> found_;
};

}  // namespace

BaseCobaseGraph build_graph(std::shared_ptr<const Matroid> m) {
  if (!m) throw PreconditionError("build_graph needs a matroid");
  const std::size_t n = m->ground_size();
  if (n % 2 != 0 || m->rank() * 2 != n) {
    throw NotBlockError("not a block matroid: ground set has " + std::to_string(n) +
                        " elements but rank is " + std::to_string(m->rank()));
  }
  std::vector<ElementSet> vertices = VertexEnumerator(*m).run();
  if (vertices.empty()) {
    throw NotBlockError("not a block matroid: no base of rank " +
                        std::to_string(m->rank()) + " has a base as complement");
  }
  return BaseCobaseGraph(std::move(m), std::move(vertices));
}

std::vector<std::optional<std::size_t>> bfs_distances(const BaseCobaseGraph& g,
                                                      std::size_t source) {
  if (source >= g.vertex_count()) {
    throw DomainError("vertex index " + std::to_string(source) + " out of range");
  }
  std::vector<std::optional<std::size_t>> dist(g.vertex_count());
  std::deque<std::size_t> frontier{source};
  dist[source] = 0;
  while (!frontier.empty()) {
    const std::size_t at = frontier.front();
    frontier.pop_front();
    for (std::size_t next : g.neighbours(at)) {
      if (dist[next]) continue;
      dist[next] = *dist[at] + 1;
      frontier.push_back(next);
    }
  }
  return dist;
}

bool is_connected(const BaseCobaseGraph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("empty base-cobase graph");
  const auto dist = bfs_distances(g, 0);
  return std::all_of(dist.begin(), dist.end(), [](const auto& d) { return d.has_value(); });
}

std::optional<std::size_t> diameter(const BaseCobaseGraph& g) {
  if (g.vertex_count() == 0) throw PreconditionError("empty base-cobase graph");
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    for (const auto& d : bfs_distances(g, s)) {
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

std::vector<ComponentSummary> components(const BaseCobaseGraph& g) {
  std::vector<ComponentSummary> out;
  std::vector<bool> assigned(g.vertex_count(), false);
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (assigned[s]) continue;
    ComponentSummary c;
    const auto dist = bfs_distances(g, s);
    for (std::size_t v = 0; v < dist.size(); ++v) {
      if (dist[v]) {
        c.vertices.push_back(v);
        assigned[v] = true;
      }
    }
    for (std::size_t v : c.vertices) {
      for (const auto& d : bfs_distances(g, v)) {
        if (d) c.diameter = std::max(c.diameter, *d);
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

void write_adjacency(std::ostream& out, const BaseCobaseGraph& g) {
  out << "# base-cobase graph: " << g.vertex_count() << " vertices, " << g.edge_count()
      << " edges, rank " << g.rank() << '\n';
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "v " << v << ':';
    for (const auto& l : g.block().labels_of(g.vertices()[v])) out << ' ' << l;
    out << '\n';
  }
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

// ---------------------------------------------------------------------------
// Cyclic orders

bool verify_cyclic_order(const BasePair& p, const CyclicOrder& order) {
  const std::size_t n = p.rank();
  if (order.sequence.size() != 2 * n) return false;
  const ElementSet firsts(std::span<const ElementId>(order.sequence.data(), n));
  const ElementSet seconds(std::span<const ElementId>(order.sequence.data() + n, n));
  if (firsts != p.a() || seconds != p.b()) return false;
  for (std::size_t start = 0; start < 2 * n; ++start) {
    ElementSet window;
    for (std::size_t i = 0; i < n; ++i) window.insert(order.sequence[(start + i) % (2 * n)]);
    if (!p.matroid().is_base(window)) return false;
  }
  return true;
}

namespace {

class CyclicSearch {
 public:
  CyclicSearch(const BasePair& p, SearchBudget budget)
      : p_(p), budget_(budget), n_(p.rank()), a_ids_(p.a().to_vector()),
        b_ids_(p.b().to_vector()) {}

  std::optional<CyclicOrder> run() {
    if (n_ == 0) return CyclicOrder{};
    sequence_.clear();
    if (place(ElementSet{})) return CyclicOrder{sequence_};
    return std::nullopt;
  }

 private:
  bool window_is_base(std::size_t start) {
    ElementSet window;
    for (std::size_t i = 0; i < n_; ++i) window.insert(sequence_[(start + i) % (2 * n_)]);
    auto it = memo_.find(window);
    if (it != memo_.end()) return it->second;
    if (budget_.max_steps != 0 && ++steps_ > budget_.max_steps) {
      throw BudgetExhausted("cyclic order search exceeded " +
                            std::to_string(budget_.max_steps) + " steps on " +
                            p_.describe());
    }
    const bool base = p_.matroid().is_base(window);
    memo_.emplace(std::move(window), base);
    return base;
  }

  bool place(const ElementSet& used) {
    const std::size_t pos = sequence_.size();
    if (pos == 2 * n_) {
      // Windows wrapping around the end.
      for (std::size_t start = n_ + 1; start < 2 * n_; ++start) {
        if (!window_is_base(start)) return false;
      }
      return true;
    }
    const auto& pool = pos < n_ ? a_ids_ : b_ids_;
    for (ElementId x : pool) {
      if (used.contains(x)) continue;
      sequence_.push_back(x);
      // The window ending at pos is complete once pos >= n - 1.
      const bool ok = pos + 1 < n_ || window_is_base(pos + 1 - n_);
      if (ok && place(used.with(x))) return true;
      sequence_.pop_back();
    }
    return false;
  }

  const BasePair& p_;
  SearchBudget budget_;
  std::size_t n_;
  std::vector<ElementId> a_ids_;
  std::vector<ElementId> b_ids_;
  std::vector<ElementId> sequence_;
  std::unordered_map<ElementSet, bool> memo_;
  std::uint64_t steps_ = 0;
};

}  // namespace

std::optional<CyclicOrder> find_cyclic_order(const BasePair& p, SearchBudget budget) {
  return CyclicSearch(p, budget).run();
}

CyclicOrder serial_to_cyclic(const BasePair& p, const ExchangeSequence& seq) {
  if (seq.size() != p.rank()) {
    throw PreconditionError("serial_to_cyclic needs a full exchange of length " +
                            std::to_string(p.rank()) + ", got " +
                            std::to_string(seq.size()));
  }
  if (!verify_sequence(p, seq)) {
    throw PreconditionError("sequence is not a serial symmetric exchange");
  }
  CyclicOrder order;
  order.sequence = seq.a_order;
  order.sequence.insert(order.sequence.end(), seq.b_order.begin(), seq.b_order.end());
  if (!verify_cyclic_order(p, order)) {
    throw InternalConsistencyError("cyclic order from a valid serial exchange fails a window");
  }
  return order;
}

}  // namespace matex
