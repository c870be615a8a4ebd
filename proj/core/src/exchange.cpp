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

#include "matex/exchange.hpp"

#include <algorithm>
#include <sstream>

#include "combinations.hpp"
#include "matex/errors.hpp"

namespace matex {

namespace {

void require_in(const ElementSet& side, ElementId x, const Matroid& m,
                const char* side_name) {
  if (!side.contains(x)) {
    const std::string name =
        x < m.ground_size() ? m.labels()[x] : "#" + std::to_string(x);
    throw DomainError("element " + name + " is not in base " + side_name);
  }
}

bool lexicographically_less(const ExchangeSequence& x, const ExchangeSequence& y) {
  if (x.a_order != y.a_order) return x.a_order < y.a_order;
  return x.b_order < y.b_order;
}

ExchangeSequence verified_or_throw(const BasePair& p, ExchangeSequence seq,
                                   const char* what) {
  if (!verify_sequence(p, seq)) {
    throw InternalConsistencyError(std::string(what) +
                                   " produced a sequence that fails verification on " +
                                   p.describe());
  }
  return seq;
}

ElementId only_member(const ElementSet& s) {
  if (s.size() != 1) throw InternalConsistencyError("expected a singleton leftover set");
  return *s.begin();
}

}  // namespace

// ---------------------------------------------------------------------------
// BasePair

BasePair::BasePair(std::shared_ptr<const Matroid> matroid, ElementSet a, ElementSet b)
    : matroid_(std::move(matroid)), a_(std::move(a)), b_(std::move(b)) {
  if (!matroid_) throw PreconditionError("BasePair needs a matroid");
  matroid_->validate(a_);
  matroid_->validate(b_);
  if (a_.intersects(b_)) {
    throw PreconditionError("bases overlap in " + matroid_->format(a_ & b_));
  }
  if (!matroid_->is_base(a_)) {
    throw PreconditionError(matroid_->format(a_) + " is not a base");
  }
  if (!matroid_->is_base(b_)) {
    throw PreconditionError(matroid_->format(b_) + " is not a base");
  }
}

BasePair BasePair::exchanged(ElementId a, ElementId b) const {
  require_in(a_, a, *matroid_, "A");
  require_in(b_, b, *matroid_, "B");
  return BasePair(matroid_, a_.swapped(a, b), b_.swapped(b, a));
}

BasePair BasePair::reversed() const { return BasePair(matroid_, b_, a_); }

ElementSet BasePair::support_in_a(ElementId x) const {
  return matroid_->fundamental_circuit(a_, x);
}

ElementSet BasePair::support_in_b(ElementId x) const {
  return matroid_->fundamental_circuit(b_, x);
}

std::string BasePair::describe() const {
  return "A=" + matroid_->format(a_) + " B=" + matroid_->format(b_);
}

// ---------------------------------------------------------------------------
// Sequences

ExchangeSequence make_sequence(const BasePair& p, std::vector<ElementId> a_order,
                               std::vector<ElementId> b_order) {
  if (a_order.size() != b_order.size()) {
    throw StructuralError("a_order has " + std::to_string(a_order.size()) +
                          " elements but b_order has " + std::to_string(b_order.size()));
  }
  const Matroid& m = p.matroid();
  ElementSet seen_a, seen_b;
  for (ElementId a : a_order) {
    if (!p.a().contains(a)) {
      throw StructuralError("a_order element " +
                            (a < m.ground_size() ? m.labels()[a] : std::to_string(a)) +
                            " is not in A");
    }
    if (seen_a.contains(a)) throw StructuralError("a_order repeats " + m.labels()[a]);
    seen_a.insert(a);
  }
  for (ElementId b : b_order) {
    if (!p.b().contains(b)) {
      throw StructuralError("b_order element " +
                            (b < m.ground_size() ? m.labels()[b] : std::to_string(b)) +
                            " is not in B");
    }
    if (seen_b.contains(b)) throw StructuralError("b_order repeats " + m.labels()[b]);
    seen_b.insert(b);
  }

  ExchangeSequence seq{std::move(a_order), std::move(b_order), {}};
  ElementSet a_side = p.a();
  ElementSet b_side = p.b();
  seq.certificate.reserve(2 * seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    a_side = a_side.swapped(seq.a_order[i], seq.b_order[i]);
    b_side = b_side.swapped(seq.b_order[i], seq.a_order[i]);
    seq.certificate.push_back(a_side);
    seq.certificate.push_back(b_side);
  }
  return seq;
}

bool verify_sequence(const BasePair& p, const ExchangeSequence& seq, ExchangeSide side) {
  const ExchangeSequence derived = make_sequence(p, seq.a_order, seq.b_order);
  if (!seq.certificate.empty() && seq.certificate != derived.certificate) return false;
  const Matroid& m = p.matroid();
  for (std::size_t i = 0; i < derived.size(); ++i) {
    if (side != ExchangeSide::kB && !m.is_base(derived.certificate[2 * i])) return false;
    if (side != ExchangeSide::kA && !m.is_base(derived.certificate[2 * i + 1])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Single exchanges

bool is_symmetric_exchange(const BasePair& p, ElementId a, ElementId b) {
  require_in(p.a(), a, p.matroid(), "A");
  require_in(p.b(), b, p.matroid(), "B");
  return p.support_in_a(b).contains(a) && p.support_in_b(a).contains(b);
}

bool swap_keeps_bases(const BasePair& p, ElementId a, ElementId b) {
  require_in(p.a(), a, p.matroid(), "A");
  require_in(p.b(), b, p.matroid(), "B");
  return p.matroid().is_base(p.a().swapped(a, b)) &&
         p.matroid().is_base(p.b().swapped(b, a));
}

ElementId find_symmetric_partner(const BasePair& p, ElementId a) {
  require_in(p.a(), a, p.matroid(), "A");
  const ElementSet support = p.support_in_b(a);
  for (ElementId b : support) {
    if (p.support_in_a(b).contains(a)) return b;
  }
  throw InternalConsistencyError("element " + p.matroid().labels()[a] +
                                 " has no symmetric partner in " + p.describe());
}

std::pair<Exchange, Exchange> find_two_disjoint_exchanges(const BasePair& p) {
  if (p.rank() <= 1) {
    throw PreconditionError("two disjoint exchanges need rank > 1, got rank " +
                            std::to_string(p.rank()));
  }
  std::vector<Exchange> exchanges;
  for (ElementId a : p.a()) {
    const ElementSet support = p.support_in_b(a);
    for (ElementId b : support) {
      if (p.support_in_a(b).contains(a)) exchanges.push_back({a, b});
    }
  }
  for (std::size_t i = 0; i < exchanges.size(); ++i) {
    for (std::size_t j = i + 1; j < exchanges.size(); ++j) {
      if (exchanges[i].a != exchanges[j].a && exchanges[i].b != exchanges[j].b) {
        return {exchanges[i], exchanges[j]};
      }
    }
  }
  throw InternalConsistencyError("no two disjoint symmetric exchanges in " + p.describe());
}

ConnSet conn_set(const BasePair& p, ElementId source, ElementId target) {
  require_in(p.a(), source, p.matroid(), "A");
  require_in(p.a(), target, p.matroid(), "A");
  if (source == target) {
    throw DomainError("conn_set needs distinct elements, got " +
                      p.matroid().labels()[source] + " twice");
  }
  ConnSet conn{source, target, {}};
  for (ElementId b : p.support_in_b(source)) {
    if (p.support_in_a(b).contains(target)) conn.members.insert(b);
  }
  return conn;
}

// ---------------------------------------------------------------------------
// Constructive exchanges

ExchangeSequence pair_serial_exchange(const BasePair& p, ElementId a1, ElementId a2) {
  require_in(p.a(), a1, p.matroid(), "A");
  require_in(p.a(), a2, p.matroid(), "A");
  if (a1 == a2) {
    throw DomainError("pair_serial_exchange needs two distinct elements, got " +
                      p.matroid().labels()[a1] + " twice");
  }

  const ElementId b1 = find_symmetric_partner(p, a1);
  const BasePair shifted = p.exchanged(a1, b1);  // (A', B')

  for (ElementId b : shifted.b().without(a1)) {
    if (is_symmetric_exchange(shifted, a2, b)) {
      return verified_or_throw(p, make_sequence(p, {a1, a2}, {b1, b}),
                               "pair exchange (direct)");
    }
  }

  // a2 can only be exchanged with a1 in (A', B').
  if (!is_symmetric_exchange(shifted, a2, a1)) {
    throw InternalConsistencyError("element " + p.matroid().labels()[a2] +
                                   " has no symmetric partner after the first swap on " +
                                   p.describe());
  }
  const ElementSet toward_a2 = conn_set(shifted, b1, a2).members.without(a1);
  const ElementSet from_a2 = conn_set(shifted, a2, b1).members.without(a1);
  if (toward_a2.empty() || from_a2.empty()) {
    throw InternalConsistencyError("connector set is a singleton on " + p.describe());
  }
  const ElementId b2 = *toward_a2.min();
  const ElementId b3 = *from_a2.min();
  if (b2 == b3) {
    throw InternalConsistencyError("connector elements coincide on " + p.describe());
  }

  if (shifted.support_in_a(b2).contains(b1)) {
    // b1 and b2 are exchangeable in (A', B'): equivalent to (a1, b2) on
    // (A, B), after which a2 pairs with b3.
    return verified_or_throw(p, make_sequence(p, {a1, a2}, {b2, b3}),
                             "pair exchange (case 1)");
  }
  // Swap a2 with a1 in (A', B') first, i.e. (a2, b1) on (A, B); b1 and b2
  // become exchangeable, which lands on (a2, b2) then (a1, b3).
  return verified_or_throw(p, make_sequence(p, {a2, a1}, {b2, b3}),
                           "pair exchange (case 2)");
}

ExchangeSequence full_serial_exchange_rank3(const BasePair& p) {
  if (p.rank() != 3) {
    throw PreconditionError("rank-3 procedure called on rank " + std::to_string(p.rank()));
  }
  std::vector<Exchange> exchanges;
  for (ElementId a : p.a()) {
    for (ElementId b : p.b()) {
      if (is_symmetric_exchange(p, a, b)) exchanges.push_back({a, b});
    }
  }
  // Any two disjoint exchanges work as first and last step with the
  // leftover pair in between; take the smallest resulting orders.
  std::optional<ExchangeSequence> best;
  for (const Exchange& first : exchanges) {
    for (const Exchange& last : exchanges) {
      if (first.a == last.a || first.b == last.b) continue;
      const ElementId a_mid = only_member(p.a() - ElementSet{first.a, last.a});
      const ElementId b_mid = only_member(p.b() - ElementSet{first.b, last.b});
      ExchangeSequence candidate =
          make_sequence(p, {first.a, a_mid, last.a}, {first.b, b_mid, last.b});
      if (!best || lexicographically_less(candidate, *best)) best = std::move(candidate);
    }
  }
  if (!best) {
    throw InternalConsistencyError("no two disjoint symmetric exchanges in " + p.describe());
  }
  return verified_or_throw(p, std::move(*best), "rank-3 exchange");
}

namespace {

// Given a verified two-step prefix, closes a rank-4 exchange with a
// symmetric exchange (a', b') of (A, B) among the leftovers, placing the
// other leftover pair third. Returns the smallest such completion.
std::optional<ExchangeSequence> close_rank4(const BasePair& p,
                                            const ExchangeSequence& prefix) {
  const ElementSet left_a =
      p.a() - ElementSet(std::span<const ElementId>(prefix.a_order));
  const ElementSet left_b =
      p.b() - ElementSet(std::span<const ElementId>(prefix.b_order));
  std::optional<ExchangeSequence> best;
  for (ElementId a_last : left_a) {
    for (ElementId b_last : left_b) {
      if (!is_symmetric_exchange(p, a_last, b_last)) continue;
      const ElementId a_third = only_member(left_a.without(a_last));
      const ElementId b_third = only_member(left_b.without(b_last));
      ExchangeSequence candidate = make_sequence(
          p, {prefix.a_order[0], prefix.a_order[1], a_third, a_last},
          {prefix.b_order[0], prefix.b_order[1], b_third, b_last});
      if (!best || lexicographically_less(candidate, *best)) best = std::move(candidate);
    }
  }
  return best;
}

}  // namespace

ExchangeSequence full_serial_exchange_rank4(const BasePair& p) {
  if (p.rank() != 4) {
    throw PreconditionError("rank-4 procedure called on rank " + std::to_string(p.rank()));
  }
  const std::vector<ElementId> a_ids = p.a().to_vector();
  const ExchangeSequence head = pair_serial_exchange(p, a_ids[0], a_ids[1]);
  if (auto done = close_rank4(p, head)) {
    return verified_or_throw(p, std::move(*done), "rank-4 exchange (direct close)");
  }

  // No symmetric exchange among the leftovers: pair the other two A
  // elements first. Their partners cannot both be leftovers of `head`.
  const std::vector<ElementId> rest =
      (p.a() - ElementSet(std::span<const ElementId>(head.a_order))).to_vector();
  const ExchangeSequence other = pair_serial_exchange(p, rest[0], rest[1]);
  const ElementSet head_b(std::span<const ElementId>(head.b_order));
  if (!head_b.contains(other.b_order[0]) && !head_b.contains(other.b_order[1])) {
    throw InternalConsistencyError(
        "second pair exchange avoided the first pair's B elements on " + p.describe());
  }
  if (auto done = close_rank4(p, other)) {
    return verified_or_throw(p, std::move(*done), "rank-4 exchange (second pair)");
  }
  throw InternalConsistencyError("no closing symmetric exchange for rank 4 on " +
                                 p.describe());
}

FullExchangeOutcome full_serial_exchange(const BasePair& p, Fallback fallback,
                                         SearchBudget budget) {
  auto constructive = [&]() -> ExchangeSequence {
    const std::vector<ElementId> a_ids = p.a().to_vector();
    switch (p.rank()) {
      case 0:
        return make_sequence(p, {}, {});
      case 1:
        return verified_or_throw(p, make_sequence(p, a_ids, p.b().to_vector()),
                                 "rank-1 exchange");
      case 2:
        return pair_serial_exchange(p, a_ids[0], a_ids[1]);
      case 3:
        return full_serial_exchange_rank3(p);
      case 4:
        return full_serial_exchange_rank4(p);
      default:
        throw PreconditionError("constructive full exchange covers rank <= 4, got rank " +
                                std::to_string(p.rank()));
    }
  };
  try {
    return FullExchangeOutcome{constructive(), false, {}};
  } catch (const InternalConsistencyError& e) {
    if (fallback == Fallback::kNone) throw;
    auto found = brute_force_serial_exchange(p, p.a(), budget);
    if (!found) {
      throw InternalConsistencyError(std::string(e.what()) +
                                     "; exhaustive search found no full exchange either");
    }
    return FullExchangeOutcome{std::move(*found), true, e.what()};
  }
}

// ---------------------------------------------------------------------------
// Exhaustive search

namespace {

class SerialSearch {
 public:
  SerialSearch(const BasePair& p, SearchBudget budget,
               const std::function<bool(const ExchangeSequence&)>& visit)
      : p_(p), budget_(budget), visit_(visit), b_ids_(p.b().to_vector()) {}

  // Returns false once the visitor asked to stop.
  bool run(const std::vector<ElementId>& a_order) {
    a_order_ = a_order;
    b_order_.clear();
    return extend(p_.a(), p_.b(), ElementSet{});
  }

 private:
  bool extend(const ElementSet& a_side, const ElementSet& b_side, const ElementSet& used) {
    const std::size_t step = b_order_.size();
    if (step == a_order_.size()) return visit_(make_sequence(p_, a_order_, b_order_));
    const ElementId a = a_order_[step];
    for (ElementId b : b_ids_) {
      if (used.contains(b)) continue;
      if (budget_.max_steps != 0 && ++steps_ > budget_.max_steps) {
        throw BudgetExhausted("serial exchange search exceeded " +
                              std::to_string(budget_.max_steps) + " steps on " +
                              p_.describe());
      }
      ElementSet next_a = a_side.swapped(a, b);
      ElementSet next_b = b_side.swapped(b, a);
      // Swaps keep the size at the rank, so independence means base.
      if (!p_.matroid().is_independent(next_a) || !p_.matroid().is_independent(next_b)) {
        continue;
      }
      b_order_.push_back(b);
      const bool keep_going = extend(next_a, next_b, used.with(b));
      b_order_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const BasePair& p_;
  SearchBudget budget_;
  const std::function<bool(const ExchangeSequence&)>& visit_;
  std::vector<ElementId> b_ids_;
  std::vector<ElementId> a_order_;
  std::vector<ElementId> b_order_;
  std::uint64_t steps_ = 0;
};

}  // namespace

void for_each_serial_exchange(const BasePair& p, const ElementSet& a_subset,
                              SearchBudget budget,
                              const std::function<bool(const ExchangeSequence&)>& visit) {
  for (ElementId a : a_subset) require_in(p.a(), a, p.matroid(), "A");
  std::vector<ElementId> a_order = a_subset.to_vector();
  SerialSearch search(p, budget, visit);
  do {
    if (!search.run(a_order)) return;
  } while (std::next_permutation(a_order.begin(), a_order.end()));
}

std::optional<ExchangeSequence> brute_force_serial_exchange(const BasePair& p,
                                                            const ElementSet& a_subset,
                                                            SearchBudget budget) {
  std::optional<ExchangeSequence> first;
  for_each_serial_exchange(p, a_subset, budget, [&](const ExchangeSequence& seq) {
    first = seq;
    return false;
  });
  return first;
}

std::vector<ExchangeSequence> all_serial_exchanges(const BasePair& p,
                                                   const ElementSet& a_subset,
                                                   SearchBudget budget) {
  std::vector<ExchangeSequence> out;
  for_each_serial_exchange(p, a_subset, budget, [&](const ExchangeSequence& seq) {
    out.push_back(seq);
    return true;
  });
  return out;
}

std::optional<ElementSet> complementary_exchange_subset(const BasePair& p,
                                                        const ElementSet& a_subset) {
  for (ElementId a : a_subset) require_in(p.a(), a, p.matroid(), "A");
  const Matroid& m = p.matroid();
  const ElementSet a_rest = p.a() - a_subset;
  std::optional<ElementSet> found;
  detail::for_each_combination(p.b().to_vector(), a_subset.size(),
                               [&](const ElementSet& b_subset) {
                                 if (m.is_base(a_rest | b_subset) &&
                                     m.is_base((p.b() - b_subset) | a_subset)) {
                                   found = b_subset;
                                   return false;
                                 }
                                 return true;
                               });
  return found;
}

// ---------------------------------------------------------------------------
// Support properties

SupportUnions serial_support_unions(const BasePair& p, const ExchangeSequence& seq,
                                    std::size_t k) {
  if (k == 0 || k > seq.size()) {
    throw PreconditionError("prefix length " + std::to_string(k) + " outside [1, " +
                            std::to_string(seq.size()) + "]");
  }
  if (!verify_sequence(p, seq, ExchangeSide::kB)) {
    throw PreconditionError("sequence is not a serial exchange relative to B");
  }
  const Matroid& m = p.matroid();
  SupportUnions unions;
  ElementSet current = p.b();
  for (std::size_t i = 0; i < k; ++i) {
    unions.original |= m.fundamental_circuit(p.b(), seq.a_order[i]);
    unions.serial |= m.fundamental_circuit(current, seq.a_order[i]) & p.b();
    current = current.swapped(seq.b_order[i], seq.a_order[i]);
  }
  return unions;
}

bool serial_support_identity_check(const BasePair& p, const ExchangeSequence& seq,
                                   std::size_t k) {
  const SupportUnions u = serial_support_unions(p, seq, k);
  return u.original == u.serial;
}

bool support_stability_admissible(const BasePair& p, ElementId a1, ElementId a2, ElementId b1,
                       ElementId b2) {
  require_in(p.a(), a1, p.matroid(), "A");
  require_in(p.a(), a2, p.matroid(), "A");
  require_in(p.b(), b1, p.matroid(), "B");
  require_in(p.b(), b2, p.matroid(), "B");
  if (a1 == a2 || b1 == b2) return false;
  if (!p.matroid().is_base(p.b().swapped(b1, a1))) return false;
  return !p.support_in_b(a1).contains(b2) || !p.support_in_b(a2).contains(b1);
}

bool support_stability_property(const BasePair& p, ElementId a1, ElementId a2, ElementId b1,
                     ElementId b2) {
  if (!support_stability_admissible(p, a1, a2, b1, b2)) {
    throw PreconditionError("tuple outside the hypothesis of the support-stability property");
  }
  const ElementSet shifted = p.b().swapped(b1, a1);
  const bool after = p.matroid().fundamental_circuit(shifted, a2).contains(b2);
  const bool before = p.support_in_b(a2).contains(b2);
  return after == before;
}

bool symmetric_support_property(const BasePair& p, ElementId a, ElementId b, ElementId b_prime) {
  if (!is_symmetric_exchange(p, a, b)) {
    throw PreconditionError("(" + p.matroid().labels()[a] + ", " + p.matroid().labels()[b] +
                            ") is not a symmetric exchange");
  }
  require_in(p.b(), b_prime, p.matroid(), "B");
  if (b_prime == b) throw PreconditionError("b' must differ from b");
  const Matroid& m = p.matroid();

  const ElementSet inherited = m.fundamental_circuit(p.b().swapped(b, a), b);
  const ElementSet expected = p.support_in_b(a).swapped(b, a);
  const bool part_i = inherited == expected;

  const bool after = m.fundamental_circuit(p.a().swapped(a, b), b_prime).contains(b);
  const bool before = p.support_in_a(b_prime).contains(a);
  return part_i && after == before;
}

}  // namespace matex
