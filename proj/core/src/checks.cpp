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
#include <bit>
#include <map>
#include <sstream>

#include "combinations.hpp"
#include "matex/base_cobase.hpp"
#include "matex/errors.hpp"
#include "matex/harness.hpp"
#include "matex/random.hpp"

namespace matex {

namespace {

struct Outcome {
  FindingStatus status = FindingStatus::kPass;
  std::string detail;
  std::vector<ElementId> inputs;
};

Outcome pass(std::string detail) { return {FindingStatus::kPass, std::move(detail), {}}; }

Outcome violation(std::string detail, std::vector<ElementId> inputs) {
  return {FindingStatus::kViolation, std::move(detail), std::move(inputs)};
}

std::string labels_of(const Matroid& m, const std::vector<ElementId>& ids) {
  std::string out;
  for (ElementId id : ids) out += (out.empty() ? "" : ",") + m.labels()[id];
  return out;
}

// Visits index tuples over `extents`, exhaustively when small enough and
// otherwise by sampling `cap` tuples.
template <typename Visit>
std::string for_each_tuple(const std::vector<std::size_t>& extents, bool exhaustive_by_size,
                           const CheckOptions& options, std::uint64_t seed, Visit&& visit) {
  std::size_t total = 1;
  for (std::size_t e : extents) total *= e;
  std::vector<std::size_t> idx(extents.size(), 0);
  if (total == 0) return "no tuples";
  if (exhaustive_by_size || total <= options.sample_cap) {
    for (std::size_t t = 0; t < total; ++t) {
      std::size_t rest = t;
      for (std::size_t d = extents.size(); d-- > 0;) {
        idx[d] = rest % extents[d];
        rest /= extents[d];
      }
      if (!visit(idx)) break;
    }
    return "exhaustive over " + std::to_string(total) + " tuples";
  }
  PortableRng rng(seed);
  for (std::size_t t = 0; t < options.sample_cap; ++t) {
    for (std::size_t d = 0; d < extents.size(); ++d) idx[d] = rng.below(extents[d]);
    if (!visit(idx)) break;
  }
  return "sampled " + std::to_string(options.sample_cap) + " of " + std::to_string(total) +
         " tuples";
}

// ---------------------------------------------------------------------------

Outcome check_exchange_criteria(const BasePair& p, const CheckOptions&, std::uint64_t) {
  std::size_t count = 0, symmetric = 0;
  for (ElementId a : p.a()) {
    for (ElementId b : p.b()) {
      const bool by_circuits = is_symmetric_exchange(p, a, b);
      const bool by_bases = swap_keeps_bases(p, a, b);
      if (by_circuits != by_bases) {
        return violation("circuit criterion says " + std::string(by_circuits ? "yes" : "no") +
                             ", base swap says " + (by_bases ? "yes" : "no"),
                         {a, b});
      }
      ++count;
      symmetric += by_circuits;
    }
  }
  return pass(std::to_string(symmetric) + " of " + std::to_string(count) +
              " pairs are symmetric exchanges");
}

Outcome check_partner_existence(const BasePair& p, const CheckOptions&, std::uint64_t) {
  const BasePair back = p.reversed();
  for (ElementId a : p.a()) {
    try {
      find_symmetric_partner(p, a);
    } catch (const InternalConsistencyError& e) {
      return violation(e.what(), {a});
    }
  }
  for (ElementId b : p.b()) {
    try {
      find_symmetric_partner(back, b);
    } catch (const InternalConsistencyError& e) {
      return violation(e.what(), {b});
    }
  }
  return pass("every element of A and B has a symmetric partner");
}

Outcome check_two_disjoint(const BasePair& p, const CheckOptions&, std::uint64_t) {
  if (p.rank() <= 1) return pass("not applicable at rank " + std::to_string(p.rank()));
  const auto [x, y] = find_two_disjoint_exchanges(p);
  if (x.a == y.a || x.b == y.b || !swap_keeps_bases(p, x.a, x.b) ||
      !swap_keeps_bases(p, y.a, y.b)) {
    return violation("returned exchanges are not disjoint symmetric exchanges",
                     {x.a, x.b, y.a, y.b});
  }
  return pass("(" + labels_of(p.matroid(), {x.a, x.b}) + ") and (" +
              labels_of(p.matroid(), {y.a, y.b}) + ")");
}

Outcome check_conn_nonsingleton(const BasePair& p, const CheckOptions&, std::uint64_t) {
  std::map<std::size_t, std::size_t> histogram;
  for (ElementId source : p.a()) {
    for (ElementId target : p.a()) {
      if (source == target) continue;
      const std::size_t size = conn_set(p, source, target).members.size();
      if (size == 1) return violation("connector set of size 1", {source, target});
      ++histogram[size];
    }
  }
  std::string detail = "sizes";
  for (auto [size, n] : histogram) {
    detail += " " + std::to_string(size) + ":" + std::to_string(n);
  }
  return pass(detail);
}

// Brute force: some S inside `pool` with S independent and S + y dependent,
// i.e. a circuit through y inside pool + y.
bool circuit_through(const Matroid& m, const std::vector<ElementId>& pool, ElementId y) {
  const std::size_t n = pool.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) > m.rank()) continue;
    ElementSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) s.insert(pool[i]);
    }
    if (m.is_independent(s) && !m.is_independent(s.with(y))) return true;
  }
  return false;
}

Outcome check_circuit_elimination(const BasePair& p, const CheckOptions& options,
                                  std::uint64_t seed) {
  const Matroid& m = p.matroid();
  std::vector<ElementSet> circuits;
  for (ElementId b : p.b()) circuits.push_back(m.closed_circuit(p.a(), b));
  for (ElementId a : p.a()) circuits.push_back(m.closed_circuit(p.b(), a));
  std::sort(circuits.begin(), circuits.end());
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());

  struct Case {
    std::size_t c1, c2;
    ElementId x, y;
  };
  std::vector<Case> cases;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i == j) continue;
      const ElementSet common = circuits[i] & circuits[j];
      const ElementSet only_first = circuits[i] - circuits[j];
      for (ElementId x : common) {
        for (ElementId y : only_first) cases.push_back({i, j, x, y});
      }
    }
  }
  std::optional<Outcome> bad;
  const std::string how = for_each_tuple(
      {cases.size()}, m.ground_size() <= options.exhaustive_ground_limit, options, seed,
      [&](const std::vector<std::size_t>& idx) {
        const Case& c = cases[idx[0]];
        const ElementSet pool = ((circuits[c.c1] | circuits[c.c2]).without(c.x)).without(c.y);
        if (!circuit_through(m, pool.to_vector(), c.y)) {
          std::vector<ElementId> inputs = circuits[c.c1].to_vector();
          inputs.push_back(c.x);
          inputs.push_back(c.y);
          bad = violation("no circuit through y avoiding x in C1 + C2 = " +
                              m.format(circuits[c.c1]) + " + " + m.format(circuits[c.c2]),
                          std::move(inputs));
          return false;
        }
        return true;
      });
  if (bad) return *bad;
  return pass(std::to_string(circuits.size()) + " circuits, " + how);
}

std::vector<ExchangeSequence> constructive_sequences(const BasePair& p,
                                                     const CheckOptions& options) {
  std::vector<ExchangeSequence> out;
  const auto a_ids = p.a().to_vector();
  for (std::size_t i = 0; i < a_ids.size(); ++i) {
    for (std::size_t j = i + 1; j < a_ids.size(); ++j) {
      out.push_back(pair_serial_exchange(p, a_ids[i], a_ids[j]));
    }
  }
  if (p.rank() >= 1 && p.rank() <= 4) {
    out.push_back(full_serial_exchange(p, Fallback::kNone, options.budget).sequence);
  }
  return out;
}

Outcome check_support_identity(const BasePair& p, const CheckOptions& options, std::uint64_t) {
  std::size_t checked = 0;
  for (const auto& seq : constructive_sequences(p, options)) {
    for (std::size_t k = 1; k <= seq.size(); ++k) {
      const SupportUnions u = serial_support_unions(p, seq, k);
      if (!u.original.is_subset_of(u.serial) || !u.serial.is_subset_of(u.original)) {
        std::vector<ElementId> inputs = seq.a_order;
        inputs.insert(inputs.end(), seq.b_order.begin(), seq.b_order.end());
        return violation("unions differ at k=" + std::to_string(k) + ": " +
                             p.matroid().format(u.original) + " vs " +
                             p.matroid().format(u.serial),
                         std::move(inputs));
      }
      ++checked;
    }
  }
  return pass(std::to_string(checked) + " prefixes checked");
}

Outcome check_support_stability(const BasePair& p, const CheckOptions& options, std::uint64_t seed) {
  const auto a_ids = p.a().to_vector();
  const auto b_ids = p.b().to_vector();
  const std::size_t n = a_ids.size();
  std::size_t admissible = 0;
  std::optional<Outcome> bad;
  const std::string how = for_each_tuple(
      {n, n, n, n}, p.matroid().ground_size() <= options.exhaustive_ground_limit, options, seed,
      [&](const std::vector<std::size_t>& i) {
        const ElementId a1 = a_ids[i[0]], a2 = a_ids[i[1]], b1 = b_ids[i[2]], b2 = b_ids[i[3]];
        if (!support_stability_admissible(p, a1, a2, b1, b2)) return true;
        ++admissible;
        if (!support_stability_property(p, a1, a2, b1, b2)) {
          bad = violation("support membership changed across the swap", {a1, a2, b1, b2});
          return false;
        }
        return true;
      });
  if (bad) return *bad;
  return pass(std::to_string(admissible) + " admissible tuples, " + how);
}

Outcome check_symmetric_support(const BasePair& p, const CheckOptions& options, std::uint64_t seed) {
  const auto a_ids = p.a().to_vector();
  const auto b_ids = p.b().to_vector();
  const std::size_t n = a_ids.size();
  std::size_t admissible = 0;
  std::optional<Outcome> bad;
  const std::string how = for_each_tuple(
      {n, n, n}, p.matroid().ground_size() <= options.exhaustive_ground_limit, options, seed,
      [&](const std::vector<std::size_t>& i) {
        const ElementId a = a_ids[i[0]], b = b_ids[i[1]], b_prime = b_ids[i[2]];
        if (b == b_prime || !is_symmetric_exchange(p, a, b)) return true;
        ++admissible;
        if (!symmetric_support_property(p, a, b, b_prime)) {
          bad = violation("inherited support differs", {a, b, b_prime});
          return false;
        }
        return true;
      });
  if (bad) return *bad;
  return pass(std::to_string(admissible) + " admissible tuples, " + how);
}

Outcome check_complementary_subsets(const BasePair& p, const CheckOptions&, std::uint64_t) {
  const auto a_ids = p.a().to_vector();
  std::size_t checked = 0;
  for (std::size_t k = 0; k <= a_ids.size(); ++k) {
    std::optional<Outcome> bad;
    detail::for_each_combination(a_ids, k, [&](const ElementSet& subset) {
      ++checked;
      if (!complementary_exchange_subset(p, subset)) {
        bad = violation("no complementary B-subset", subset.to_vector());
        return false;
      }
      return true;
    });
    if (bad) return *bad;
  }
  return pass(std::to_string(checked) + " subsets of A");
}

Outcome check_pair_exchange(const BasePair& p, const CheckOptions& options, std::uint64_t) {
  const auto a_ids = p.a().to_vector();
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < a_ids.size(); ++i) {
    for (std::size_t j = i + 1; j < a_ids.size(); ++j) {
      const ElementId a1 = a_ids[i], a2 = a_ids[j];
      ExchangeSequence seq;
      try {
        seq = pair_serial_exchange(p, a1, a2);
      } catch (const InternalConsistencyError& e) {
        return violation(e.what(), {a1, a2});
      }
      if (!verify_sequence(p, seq)) return violation("constructive sequence fails", {a1, a2});
      const auto all = all_serial_exchanges(p, ElementSet{a1, a2}, options.budget);
      const bool member = std::any_of(all.begin(), all.end(),
                                      [&](const auto& s) { return s.same_orders(seq); });
      if (!member) {
        return violation("constructive sequence missing from the exhaustive solution set of " +
                             std::to_string(all.size()),
                         {a1, a2});
      }
      ++pairs;
    }
  }
  return pass(std::to_string(pairs) + " pairs exchanged and confirmed exhaustively");
}

Outcome check_full_exchange(const BasePair& p, const CheckOptions& options, std::uint64_t) {
  if (p.rank() == 0 || p.rank() > 4) {
    return pass("not applicable at rank " + std::to_string(p.rank()));
  }
  const auto outcome = full_serial_exchange(p, Fallback::kNone, options.budget);
  if (outcome.sequence.size() != p.rank() || !verify_sequence(p, outcome.sequence)) {
    return violation("full exchange failed verification", outcome.sequence.a_order);
  }
  return pass(labels_of(p.matroid(), outcome.sequence.a_order) + " / " +
              labels_of(p.matroid(), outcome.sequence.b_order));
}

Outcome check_serial_subsets(const BasePair& p, const CheckOptions& options, std::uint64_t) {
  const auto a_ids = p.a().to_vector();
  const std::size_t top = std::min(options.max_subset, a_ids.size());
  std::size_t checked = 0;
  for (std::size_t k = 1; k <= top; ++k) {
    std::optional<Outcome> bad;
    detail::for_each_combination(a_ids, k, [&](const ElementSet& subset) {
      ++checked;
      if (!brute_force_serial_exchange(p, subset, options.budget)) {
        bad = violation("no serial symmetric exchange for this subset", subset.to_vector());
        return false;
      }
      return true;
    });
    if (bad) return *bad;
  }
  return pass(std::to_string(checked) + " subsets up to size " + std::to_string(top));
}

Outcome check_cyclic_order(const BasePair& p, const CheckOptions& options, std::uint64_t) {
  const auto order = find_cyclic_order(p, options.budget);
  if (!order) return violation("no cyclic base order exists", {});
  std::string detail = "order " + labels_of(p.matroid(), order->sequence);
  if (p.rank() >= 1 && p.rank() <= 4) {
    const auto seq = full_serial_exchange(p, Fallback::kNone, options.budget).sequence;
    const CyclicOrder converted = serial_to_cyclic(p, seq);
    if (!verify_cyclic_order(p, converted)) {
      return violation("converted serial exchange fails a window", converted.sequence);
    }
    detail += "; serial conversion verified";
  }
  return pass(detail);
}

Outcome check_diameter(const BasePair& p, const CheckOptions&, std::uint64_t) {
  const Restriction block = restrict(p.matroid(), p.a() | p.b());
  const BaseCobaseGraph g = build_graph(block.matroid);
  for (const ElementSet& v : g.vertices()) {
    if (!g.index_of(g.block().ground_set() - v)) {
      return violation("vertex complement is not a vertex", block.to_parent_set(v).to_vector());
    }
  }
  const std::size_t n = g.rank();
  const auto d = diameter(g);
  if (!d) {
    std::string detail = "disconnected base-cobase graph; component diameters";
    for (const auto& c : components(g)) detail += " " + std::to_string(c.diameter);
    return violation(detail, {});
  }
  if (*d != n) {
    return violation("diameter " + std::to_string(*d) + " differs from rank " + std::to_string(n),
                     {});
  }
  return pass(std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
              " edges, diameter " + std::to_string(*d));
}

using CheckFn = Outcome (*)(const BasePair&, const CheckOptions&, std::uint64_t);

struct Registered {
  const char* name;
  CheckFn fn;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> checks = {
      {"exchange-criteria", check_exchange_criteria},
      {"partner-existence", check_partner_existence},
      {"two-disjoint", check_two_disjoint},
      {"conn-nonsingleton", check_conn_nonsingleton},
      {"circuit-elimination", check_circuit_elimination},
      {"support-identity", check_support_identity},
      {"support-stability", check_support_stability},
      {"symmetric-support", check_symmetric_support},
      {"complementary-subsets", check_complementary_subsets},
      {"pair-exchange-constructive", check_pair_exchange},
      {"full-exchange", check_full_exchange},
      {"serial-subsets", check_serial_subsets},
      {"cyclic-order", check_cyclic_order},
      {"diameter", check_diameter},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& r : registry()) out.emplace_back(r.name);
    return out;
  }();
  return names;
}

std::vector<std::string> resolve_checks(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& name : names) {
    if (name == "all") {
      for (const auto& n : check_names()) {
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
      }
      continue;
    }
    const auto& known = check_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw ConfigError("unknown check '" + name + "'");
    }
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  if (out.empty()) throw ConfigError("no checks selected");
  return out;
}

Finding run_check(std::string_view check, const CorpusInstance& instance,
                  const CheckOptions& options) {
  Finding f;
  f.instance = instance.name;
  f.check = std::string(check);
  f.witness.matroid_text = instance.matroid_text;
  f.witness.seed = instance.seed;
  f.witness.max_steps = options.budget.max_steps;

  CheckFn fn = nullptr;
  for (const auto& r : registry()) {
    if (check == r.name) fn = r.fn;
  }
  if (!fn) throw ConfigError("unknown check '" + std::string(check) + "'");

  if (!instance.pair) {
    f.status = FindingStatus::kError;
    f.detail = instance.problem.empty() ? "no base pair" : instance.problem;
    return f;
  }
  const BasePair& p = *instance.pair;
  f.witness.a_labels = p.matroid().labels_of(p.a());
  f.witness.b_labels = p.matroid().labels_of(p.b());

  try {
    Outcome out = fn(p, options, instance.seed);
    f.status = out.status;
    f.detail = std::move(out.detail);
    for (ElementId id : out.inputs) f.witness.inputs.push_back(p.matroid().labels()[id]);
  } catch (const InternalConsistencyError& e) {
    f.status = FindingStatus::kViolation;
    f.detail = e.what();
  } catch (const BudgetExhausted& e) {
    f.status = FindingStatus::kError;
    f.detail = std::string("budget exhausted: ") + e.what();
  } catch (const std::exception& e) {
    f.status = FindingStatus::kError;
    f.detail = e.what();
  }
  return f;
}

}  // namespace matex
