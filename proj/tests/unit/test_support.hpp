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

#ifndef MATEX_TESTS_TEST_SUPPORT_HPP_
#define MATEX_TESTS_TEST_SUPPORT_HPP_

// Fixture builders and brute-force oracles shared by the unit tests. The
// oracles only ever enumerate subsets; they never call into the code paths
// they are used to check beyond the raw independence query where stated.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <initializer_list>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "matex/exchange.hpp"
#include "matex/matroid.hpp"

namespace matex::testing {

inline ElementSet L(const Matroid& m, std::initializer_list<const char*> labels) {
  std::vector<std::string> v(labels.begin(), labels.end());
  return m.parse_labels(v);
}

inline ElementId id(const Matroid& m, const char* label) { return *m.find_label(label); }

inline std::vector<std::string> names(const Matroid& m, const std::vector<ElementId>& ids) {
  std::vector<std::string> out;
  for (ElementId i : ids) out.push_back(m.labels()[i]);
  return out;
}

// K4 with the labels e1=12, e2=23, e3=34, e4=13, e5=24, e6=14 (1-based
// vertices), stored 0-based.
inline std::shared_ptr<const GraphicMatroid> k4() {
  return std::make_shared<GraphicMatroid>(
      4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {0, 3}});
}

// [I_r | I_r] over GF(2), columns labelled 1..2r.
inline std::shared_ptr<const Gf2Matroid> doubled_identity(std::size_t r) {
  std::vector<std::vector<std::uint8_t>> rows(r, std::vector<std::uint8_t>(2 * r, 0));
  for (std::size_t i = 0; i < r; ++i) rows[i][i] = rows[i][r + i] = 1;
  return std::make_shared<Gf2Matroid>(rows);
}

// [I4 | c5=1100, c6=0110, c7=0011, c8=1000].
inline std::shared_ptr<const Gf2Matroid> rank4_fixture() {
  return std::make_shared<Gf2Matroid>(std::vector<std::vector<std::uint8_t>>{
      {1, 0, 0, 0, 1, 0, 0, 1},
      {0, 1, 0, 0, 1, 1, 0, 0},
      {0, 0, 1, 0, 0, 1, 1, 0},
      {0, 0, 0, 1, 0, 0, 1, 0},
  });
}

inline std::shared_ptr<const UniformMatroid> uniform(std::size_t k, std::size_t n) {
  return std::make_shared<UniformMatroid>(k, n);
}

inline BasePair halves(std::shared_ptr<const Matroid> m) {
  const std::size_t r = m->rank();
  ElementSet a = ElementSet::range(r);
  ElementSet b = m->ground_set() - a;
  return BasePair(std::move(m), a, b);
}

inline ElementSet random_subset(std::mt19937_64& rng, std::size_t ground, double p = 0.5) {
  std::bernoulli_distribution pick(p);
  ElementSet s;
  for (ElementId i = 0; i < ground; ++i) {
    if (pick(rng)) s.insert(i);
  }
  return s;
}

inline std::vector<ElementSet> all_subsets(const ElementSet& s) {
  const auto items = s.to_vector();
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << items.size()); ++mask) {
    ElementSet sub;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if ((mask >> i) & 1U) sub.insert(items[i]);
    }
    out.push_back(sub);
  }
  return out;
}

// Forest test by depth-first component counting: a loopless edge set is a
// forest iff |edges| = |touched vertices| - |components|.
inline bool brute_forest(const GraphicMatroid& g, const ElementSet& s) {
  std::vector<std::vector<std::uint32_t>> adj(g.vertex_count());
  std::vector<bool> touched(g.vertex_count(), false);
  for (ElementId e : s) {
    const Edge& edge = g.edges()[e];
    if (edge.u == edge.v) return false;
    adj[edge.u].push_back(edge.v);
    adj[edge.v].push_back(edge.u);
    touched[edge.u] = touched[edge.v] = true;
  }
  std::size_t vertices = 0, components = 0;
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    if (!touched[v]) continue;
    ++vertices;
    if (seen[v]) continue;
    ++components;
    std::vector<std::uint32_t> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
      auto at = stack.back();
      stack.pop_back();
      for (auto next : adj[at]) {
        if (!seen[next]) {
          seen[next] = true;
          stack.push_back(next);
        }
      }
    }
  }
  return s.size() == vertices - components;
}

// Linear independence over GF(2) by checking that no non-empty subset of
// the columns sums to zero.
inline bool brute_gf2_independent(const Gf2Matroid& m, const ElementSet& s) {
  const auto cols = s.to_vector();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cols.size()); ++mask) {
    bool all_zero = true;
    for (std::size_t r = 0; r < m.row_count() && all_zero; ++r) {
      bool bit = false;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if ((mask >> i) & 1U) bit ^= m.entry(r, cols[i]);
      }
      all_zero = !bit;
    }
    if (all_zero) return false;
  }
  return true;
}

// Largest independent subset, by enumeration.
inline std::size_t brute_rank(const Matroid& m, const ElementSet& s) {
  std::size_t best = 0;
  for (const auto& sub : all_subsets(s)) {
    if (sub.size() > best && m.is_independent(sub)) best = sub.size();
  }
  return best;
}

inline bool is_circuit(const Matroid& m, const ElementSet& c) {
  if (c.empty() || m.is_independent(c)) return false;
  for (ElementId x : c) {
    if (!m.is_independent(c.without(x))) return false;
  }
  return true;
}

// All circuits inside `within`, by enumeration.
inline std::vector<ElementSet> brute_circuits(const Matroid& m, const ElementSet& within) {
  std::vector<ElementSet> out;
  for (const auto& sub : all_subsets(within)) {
    if (is_circuit(m, sub)) out.push_back(sub);
  }
  return out;
}

// C(I, x) as the unique circuit of I + x, minus x.
inline ElementSet brute_support(const Matroid& m, const ElementSet& independent, ElementId x) {
  auto circuits = brute_circuits(m, independent.with(x));
  if (circuits.size() != 1) throw std::logic_error("expected a unique circuit");
  return circuits.front().without(x);
}


using Orders = std::pair<std::vector<ElementId>, std::vector<ElementId>>;

// Every paired ordering of `subset` with equally many B elements under which
// each prefix swap leaves both sides bases, checked with is_base on sets
// built here.
inline std::vector<Orders> oracle_serial_exchanges(const Matroid& m, const ElementSet& a,
                                                   const ElementSet& b,
                                                   const ElementSet& subset) {
  std::vector<Orders> out;
  std::vector<ElementId> xs = subset.to_vector();
  const std::size_t k = xs.size();
  for (const auto& ys_set : all_subsets(b)) {
    if (ys_set.size() != k) continue;
    std::vector<ElementId> ys = ys_set.to_vector();
    std::vector<ElementId> xp = xs;
    do {
      std::vector<ElementId> yp = ys;
      do {
        bool ok = true;
        ElementSet left = a, right = b;
        for (std::size_t i = 0; i < k && ok; ++i) {
          left.erase(xp[i]);
          left.insert(yp[i]);
          right.erase(yp[i]);
          right.insert(xp[i]);
          ok = m.is_base(left) && m.is_base(right);
        }
        if (ok) out.emplace_back(xp, yp);
      } while (std::next_permutation(yp.begin(), yp.end()));
    } while (std::next_permutation(xp.begin(), xp.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool contains_orders(const std::vector<Orders>& all, const ExchangeSequence& seq) {
  return std::binary_search(all.begin(), all.end(), Orders{seq.a_order, seq.b_order});
}

// Both swaps checked directly.
inline bool direct_swap_ok(const Matroid& m, const ElementSet& a, const ElementSet& b,
                           ElementId x, ElementId y) {
  return m.is_base(a.swapped(x, y)) && m.is_base(b.swapped(y, x));
}

// A small spread of block pairs across every representation.
inline std::vector<BasePair> small_pairs() {
  std::vector<BasePair> out;
  for (std::size_t k = 1; k <= 4; ++k) out.push_back(halves(uniform(k, 2 * k)));
  out.push_back(halves(doubled_identity(3)));
  out.push_back(halves(doubled_identity(4)));
  out.push_back(halves(rank4_fixture()));
  auto g = k4();
  // A = e1 e2 e3 (path), B = e4 e5 e6.
  out.emplace_back(g, ElementSet{0, 1, 2}, ElementSet{3, 4, 5});
  // A = e2 e4 e6 (path 3-0-2-1), B = e1 e3 e5 (path 0-1-3-2).
  out.emplace_back(g, ElementSet{1, 3, 5}, ElementSet{0, 2, 4});
  // W4 (hub 4): rim 01 12 23 30, spokes 40 41 42 43.
  auto w4 = std::make_shared<GraphicMatroid>(
      5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}});
  out.emplace_back(w4, ElementSet{0, 1, 2, 4}, ElementSet{3, 5, 6, 7});
  out.emplace_back(w4, ElementSet{0, 1, 2, 7}, ElementSet{3, 4, 5, 6});
  std::mt19937_64 rng(23);
  for (std::size_t r : {3, 4}) {
    int made = 0;
    while (made < 4) {
      std::vector<std::vector<std::uint8_t>> rows(r, std::vector<std::uint8_t>(2 * r, 0));
      for (std::size_t i = 0; i < r; ++i) {
        rows[i][i] = 1;
        for (std::size_t j = r; j < 2 * r; ++j) rows[i][j] = static_cast<std::uint8_t>(rng() & 1U);
      }
      auto m = std::make_shared<Gf2Matroid>(rows);
      ElementSet b = m->ground_set() - ElementSet::range(r);
      if (!m->is_base(b)) continue;
      out.emplace_back(m, ElementSet::range(r), b);
      ++made;
    }
  }
  return out;
}

}  // namespace matex::testing

#endif  // MATEX_TESTS_TEST_SUPPORT_HPP_
