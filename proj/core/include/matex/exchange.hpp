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

#ifndef MATEX_EXCHANGE_HPP_
#define MATEX_EXCHANGE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matex/element_set.hpp"
#include "matex/matroid.hpp"

namespace matex {

// Two disjoint bases (A, B) of one matroid. Construction rejects anything
// else, so every operation below may assume the invariant.
class BasePair {
 public:
  BasePair(std::shared_ptr<const Matroid> matroid, ElementSet a, ElementSet b);

  const Matroid& matroid() const { return *matroid_; }
  const std::shared_ptr<const Matroid>& matroid_ptr() const { return matroid_; }
  const ElementSet& a() const { return a_; }
  const ElementSet& b() const { return b_; }
  std::size_t rank() const { return a_.size(); }

  // (A - a + b, B - b + a). Throws PreconditionError if either side stops
  // being a base.
  BasePair exchanged(ElementId a, ElementId b) const;
  // (B, A).
  BasePair reversed() const;

  // C(A, x) and C(B, x) for x outside the respective base.
  ElementSet support_in_a(ElementId x) const;
  ElementSet support_in_b(ElementId x) const;

  std::string describe() const;

 private:
  std::shared_ptr<const Matroid> matroid_;
  ElementSet a_;
  ElementSet b_;
};

struct Exchange {
  ElementId a = 0;
  ElementId b = 0;
  friend bool operator==(const Exchange&, const Exchange&) = default;
  friend auto operator<=>(const Exchange&, const Exchange&) = default;
};

// Paired orderings of X subset A and Y subset B. certificate[2i] and
// certificate[2i+1] are the A-side and B-side sets after step i+1.
struct ExchangeSequence {
  std::vector<ElementId> a_order;
  std::vector<ElementId> b_order;
  std::vector<ElementSet> certificate;

  std::size_t size() const { return a_order.size(); }
  bool same_orders(const ExchangeSequence& other) const {
    return a_order == other.a_order && b_order == other.b_order;
  }
};

// Builds the sequence and fills the certificate with the derived
// intermediate sets (not checked). Throws StructuralError on malformed
// orders.
ExchangeSequence make_sequence(const BasePair& p, std::vector<ElementId> a_order,
                               std::vector<ElementId> b_order);

struct ConnSet {
  ElementId source = 0;
  ElementId target = 0;
  ElementSet members;
};

// a in C(A, b) and b in C(B, a).
bool is_symmetric_exchange(const BasePair& p, ElementId a, ElementId b);
// A - a + b and B - b + a are both bases. Must agree with
// is_symmetric_exchange; kept separate so tests can compare the two.
bool swap_keeps_bases(const BasePair& p, ElementId a, ElementId b);

// Smallest-id b in B symmetrically exchangeable with a.
ElementId find_symmetric_partner(const BasePair& p, ElementId a);

// Two symmetric exchanges with distinct A and distinct B elements; the
// lexicographically first such pair of pairs. Needs rank > 1.
std::pair<Exchange, Exchange> find_two_disjoint_exchanges(const BasePair& p);

// {b in B : b in C(B, source) and target in C(A, b)}.
ConnSet conn_set(const BasePair& p, ElementId source, ElementId target);

// Serial symmetric exchange of {a1, a2} with some two elements of B,
// constructed case by case: first exchange a1 with its partner b1; if a2
// then has a partner other than a1 we are done, otherwise route through the
// connector sets and exchange either (a1, b2), (a2, b3) or (a2, b2), (a1, b3).
ExchangeSequence pair_serial_exchange(const BasePair& p, ElementId a1, ElementId a2);

// Full length-3 exchange from two disjoint symmetric exchanges, with the
// leftover pair in the middle.
ExchangeSequence full_serial_exchange_rank3(const BasePair& p);

// Full length-4 exchange: pair exchange on two A elements, then close with a
// symmetric exchange among the leftovers (directly, or after pairing the
// other two A elements first).
ExchangeSequence full_serial_exchange_rank4(const BasePair& p);

struct SearchBudget {
  // Zero means unlimited.
  std::uint64_t max_steps = 0;
};

enum class Fallback { kNone, kBrute };

struct FullExchangeOutcome {
  ExchangeSequence sequence;
  bool fallback_used = false;
  // What the constructive procedure reported before the fallback ran.
  std::string anomaly;
};

// Dispatches on rank (1 through 4). With Fallback::kBrute an
// InternalConsistencyError from the constructive path is recorded and the
// exhaustive search is used instead.
FullExchangeOutcome full_serial_exchange(const BasePair& p,
                                         Fallback fallback = Fallback::kNone,
                                         SearchBudget budget = {});

// Calls `visit` for every serial symmetric exchange of `a_subset` in
// lexicographic (a_order, b_order) order until it returns false. Throws
// BudgetExhausted when the number of oracle-checked steps passes the budget.
void for_each_serial_exchange(
    const BasePair& p, const ElementSet& a_subset, SearchBudget budget,
    const std::function<bool(const ExchangeSequence&)>& visit);

std::optional<ExchangeSequence> brute_force_serial_exchange(
    const BasePair& p, const ElementSet& a_subset, SearchBudget budget = {});

std::vector<ExchangeSequence> all_serial_exchanges(const BasePair& p,
                                                   const ElementSet& a_subset,
                                                   SearchBudget budget = {});

enum class ExchangeSide {
  kBoth,  // serial symmetric exchange
  kA,     // serial exchange relative to A only
  kB,     // serial exchange relative to B only
};

// Re-derives every intermediate set and checks it through the oracle. A
// non-empty certificate must match the derived sets. Throws StructuralError
// for repeated elements, wrong sides, or mismatched lengths.
bool verify_sequence(const BasePair& p, const ExchangeSequence& seq,
                     ExchangeSide side = ExchangeSide::kBoth);

// The two unions of supports before and after each serial step, for
// prefixes of length k:
//   lhs = union_{i<=k} C(B, a_i)
//   rhs = union_{i<=k} C((B \ B_{i-1}) + A_{i-1}, a_i) intersect B
struct SupportUnions {
  ElementSet original;
  ElementSet serial;
};
SupportUnions serial_support_unions(const BasePair& p, const ExchangeSequence& seq,
                                    std::size_t k);

// original == serial. Requires seq to be a serial exchange relative to B.
bool serial_support_identity_check(const BasePair& p, const ExchangeSequence& seq,
                                   std::size_t k);

// With B' = B - b1 + a1 a base and (b2 not in C(B, a1) or b1 not in
// C(B, a2)): b2 in C(B', a2) iff b2 in C(B, a2). Hypothesis violations
// throw PreconditionError.
bool support_stability_property(const BasePair& p, ElementId a1, ElementId a2, ElementId b1,
                     ElementId b2);
// Whether (a1, a2, b1, b2) satisfies the hypothesis of support_stability_property.
bool support_stability_admissible(const BasePair& p, ElementId a1, ElementId a2, ElementId b1,
                       ElementId b2);

// For a symmetric exchange (a, b) and b' in B - b:
//   C(B - b + a, b) = C(B, a) - b + a, and
//   b in C(A - a + b, b') iff a in C(A, b').
bool symmetric_support_property(const BasePair& p, ElementId a, ElementId b, ElementId b_prime);

// For every A1 subset A, some B1 subset B makes (A \ A1) + B1 and
// (B \ B1) + A1 both bases. Returns such a B1 for the given A1.
std::optional<ElementSet> complementary_exchange_subset(const BasePair& p,
                                                        const ElementSet& a_subset);

}  // namespace matex

#endif  // MATEX_EXCHANGE_HPP_
