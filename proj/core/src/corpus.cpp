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

#include <algorithm>
#include <sstream>

#include "matex/errors.hpp"
#include "matex/harness.hpp"
#include "matex/matroid_io.hpp"
#include "matex/random.hpp"

namespace matex {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kUniform:
      return "uniform";
    case Family::kGraphic:
      return "graphic";
    case Family::kLinearGf2:
      return "linear-gf2";
    case Family::kFixtures:
      return "fixtures";
    case Family::kStandard:
      return "standard";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "uniform") return Family::kUniform;
  if (name == "graphic") return Family::kGraphic;
  if (name == "linear-gf2" || name == "gf2") return Family::kLinearGf2;
  if (name == "fixtures") return Family::kFixtures;
  if (name == "standard" || name == "default") return Family::kStandard;
  throw ConfigError("unknown corpus family '" + std::string(name) + "'");
}

void CorpusSpec::validate() const {
  if (max_rank == 0) throw ConfigError("max_rank must be positive");
  if (max_rank > kDeskMaxRank && !allow_large) {
    throw ConfigError("max_rank " + std::to_string(max_rank) + " exceeds the desk-scale cap of " +
                      std::to_string(kDeskMaxRank) + " (pass allow_large to override)");
  }
  for (std::size_t r : gf2_ranks) {
    if (r == 0) throw ConfigError("GF(2) ranks must be positive");
  }
  for (const auto& g : graphs) {
    const auto& names = curated_graph_names();
    if (std::find(names.begin(), names.end(), g) == names.end()) {
      throw ConfigError("unknown graph '" + g + "'");
    }
  }
  if (max_vertices < 2) throw ConfigError("max_vertices must be at least 2");
  if (family == Family::kFixtures && fixtures.empty()) {
    throw ConfigError("fixtures family needs at least one fixture file");
  }
}

// ---------------------------------------------------------------------------
// Curated graphs

namespace {

struct CuratedGraph {
  const char* name;
  std::size_t vertices;
  std::vector<Edge> edges;
};

const std::vector<CuratedGraph>& curated_graphs() {
  static const std::vector<CuratedGraph> graphs = {
      // Edge order matches labels e1 = 12, e2 = 23, e3 = 34, e4 = 13,
      // e5 = 24, e6 = 14 on vertices 1..4, shifted to 0-based.
      {"k4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {0, 3}}},
      // Hub 0, rim 1-2-3-4.
      {"w4", 5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 1}, {0, 2}, {0, 3}, {0, 4}}},
      {"w5", 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}},
      // K5 without the edges 01 and 23.
      {"k5-minus-matching", 5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}},
      // Triangles 012 and 345 joined by rungs; nine edges, so its tree pairs
      // leave one edge out.
      {"prism", 6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}},
      {"prism-plus-chord", 6,
       {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}, {0, 4}}},
      {"k33-plus-edge", 6,
       {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {0, 1}}},
      // Triangle with one doubled side.
      {"double-triangle", 3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}},
  };
  return graphs;
}

}  // namespace

const std::vector<std::string>& curated_graph_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& g : curated_graphs()) out.emplace_back(g.name);
    return out;
  }();
  return names;
}

std::shared_ptr<const GraphicMatroid> curated_graph(std::string_view name) {
  for (const auto& g : curated_graphs()) {
    if (name == g.name) return std::make_shared<GraphicMatroid>(g.vertices, g.edges);
  }
  throw ConfigError("unknown graph '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Disjoint base pairs

namespace {

ElementSet greedy_base_within(const Matroid& m, const ElementSet& pool) {
  ElementSet base;
  for (ElementId x : pool) {
    if (base.size() == m.rank()) break;
    ElementSet grown = base.with(x);
    if (m.is_independent(grown)) base = std::move(grown);
  }
  return base;
}

class BaseWalker {
 public:
  BaseWalker(const Matroid& m, std::size_t limit) : m_(m), limit_(limit) {}

  std::vector<std::pair<ElementSet, ElementSet>> run() {
    walk(0, {});
    return std::move(out_);
  }

 private:
  // Returns false once the limit is reached.
  bool walk(ElementId next, const ElementSet& chosen) {
    const std::size_t rank = m_.rank();
    if (chosen.size() == rank) {
      const ElementSet b = greedy_base_within(m_, m_.ground_set() - chosen);
      if (b.size() == rank) out_.emplace_back(chosen, b);
      return out_.size() < limit_;
    }
    const std::size_t need = rank - chosen.size();
    for (ElementId x = next; x + need <= m_.ground_size(); ++x) {
      ElementSet grown = chosen.with(x);
      if (!m_.is_independent(grown)) continue;
      if (!walk(x + 1, grown)) return false;
    }
    return true;
  }

  const Matroid& m_;
  std::size_t limit_;
  std::vector<std::pair<ElementSet, ElementSet>> out_;
};

}  // namespace

std::vector<std::pair<ElementSet, ElementSet>> disjoint_base_pairs(const Matroid& m,
                                                                   std::size_t limit) {
  if (limit == 0) return {};
  return BaseWalker(m, limit).run();
}

CorpusInstance make_instance(std::string name, std::shared_ptr<const Matroid> m,
                             std::optional<BasePair> pair, std::uint64_t seed) {
  CorpusInstance inst;
  inst.name = std::move(name);
  inst.matroid_text = serialize_matroid(*m);
  inst.matroid = std::move(m);
  inst.pair = std::move(pair);
  if (!inst.pair) inst.problem = "matroid has no two disjoint bases";
  inst.seed = seed;
  return inst;
}

// ---------------------------------------------------------------------------
// Families

namespace {

struct Pending {
  std::string name;
  std::shared_ptr<const Matroid> matroid;
  std::optional<BasePair> pair;
};

void add_uniform(const CorpusSpec& spec, std::vector<Pending>& out) {
  for (std::size_t k = 1; k <= spec.max_rank; ++k) {
    auto m = std::make_shared<UniformMatroid>(k, 2 * k);
    ElementSet a = ElementSet::range(k);
    ElementSet b = m->ground_set() - a;
    out.push_back({"uniform:U(" + std::to_string(k) + "," + std::to_string(2 * k) + ")", m,
                   BasePair(m, a, b)});
  }
}

void add_graph_pairs(const std::string& name, std::shared_ptr<const Matroid> m,
                     const CorpusSpec& spec, std::vector<Pending>& out) {
  if (m->rank() > spec.max_rank) return;
  // Graphs without two edge-disjoint spanning trees are not block matroids
  // and contribute nothing.
  const auto pairs = disjoint_base_pairs(*m, spec.pairs_per_graph);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.push_back({name + "#" + std::to_string(i), m, BasePair(m, pairs[i].first, pairs[i].second)});
  }
}

// Random multigraph on v vertices with 2(v-1) edges that splits into two
// spanning trees; retries until it does.
std::shared_ptr<const Matroid> random_block_graph(PortableRng& rng, std::size_t max_vertices) {
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    const std::size_t v = 3 + rng.below(max_vertices - 2);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < 2 * (v - 1); ++i) {
      const auto u = static_cast<std::uint32_t>(rng.below(v));
      auto w = static_cast<std::uint32_t>(rng.below(v - 1));
      if (w >= u) ++w;
      edges.push_back({u, w});
    }
    auto m = std::make_shared<GraphicMatroid>(v, std::move(edges));
    if (m->rank() == v - 1 && !disjoint_base_pairs(*m, 1).empty()) return m;
  }
  throw InternalConsistencyError("random block graph generator gave up");
}

void add_graphic(const CorpusSpec& spec, std::vector<Pending>& out) {
  const auto& names = spec.graphs.empty() ? curated_graph_names() : spec.graphs;
  for (const auto& name : names) {
    auto g = curated_graph(name);
    if (g->vertex_count() > spec.max_vertices) continue;
    add_graph_pairs("graphic:" + name, g, spec, out);
  }
  if (spec.random_graphs > 0 && spec.max_vertices >= 3) {
    PortableRng rng(mix_seed(spec.seed, 0x67726170ULL));
    for (std::size_t i = 0; i < spec.random_graphs; ++i) {
      add_graph_pairs("graphic:random" + std::to_string(i), random_block_graph(rng, spec.max_vertices),
                      spec, out);
    }
  }
}

void add_gf2(const CorpusSpec& spec, std::vector<Pending>& out) {
  for (std::size_t r : spec.gf2_ranks) {
    if (r > spec.max_rank) continue;
    PortableRng rng(mix_seed(spec.seed, 0x67663200ULL + r));
    for (std::size_t i = 0; i < spec.gf2_count; ++i) {
      std::vector<std::vector<std::uint8_t>> rows;
      // Rejection-sample the right-hand block until it is invertible.
      while (true) {
        rows.assign(r, std::vector<std::uint8_t>(2 * r, 0));
        for (std::size_t row = 0; row < r; ++row) {
          rows[row][row] = 1;
          for (std::size_t col = 0; col < r; ++col) {
            rows[row][r + col] = static_cast<std::uint8_t>(rng.coin());
          }
        }
        auto m = std::make_shared<Gf2Matroid>(rows);
        const ElementSet a = ElementSet::range(r);
        const ElementSet b = m->ground_set() - a;
        if (m->is_base(b)) {
          out.push_back({"gf2:r" + std::to_string(r) + "#" + std::to_string(i), m, BasePair(m, a, b)});
          break;
        }
      }
    }
  }
}

void add_fixtures(const CorpusSpec& spec, std::vector<Pending>& out) {
  for (const auto& path : spec.fixtures) {
    auto m = load_matroid(path);
    if (m->rank() > spec.max_rank) continue;
    const auto pairs = disjoint_base_pairs(*m, 1);
    std::optional<BasePair> pair;
    if (!pairs.empty()) pair.emplace(m, pairs.front().first, pairs.front().second);
    out.push_back({"fixture:" + path.filename().string(), m, std::move(pair)});
  }
}

}  // namespace

std::vector<CorpusInstance> enumerate_block_pairs(const CorpusSpec& spec) {
  spec.validate();
  std::vector<Pending> pending;
  switch (spec.family) {
    case Family::kUniform:
      add_uniform(spec, pending);
      break;
    case Family::kGraphic:
      add_graphic(spec, pending);
      break;
    case Family::kLinearGf2:
      add_gf2(spec, pending);
      break;
    case Family::kFixtures:
      add_fixtures(spec, pending);
      break;
    case Family::kStandard:
      add_uniform(spec, pending);
      add_graphic(spec, pending);
      add_gf2(spec, pending);
      add_fixtures(spec, pending);
      break;
  }
  std::vector<CorpusInstance> out;
  out.reserve(pending.size());
  for (std::size_t i = 0; i < pending.size(); ++i) {
    out.push_back(make_instance(std::move(pending[i].name), std::move(pending[i].matroid),
                                std::move(pending[i].pair), mix_seed(spec.seed, i)));
  }
  return out;
}

}  // namespace matex
