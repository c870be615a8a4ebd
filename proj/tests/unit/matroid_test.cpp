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

#include "matex/matroid.hpp"

#include <gtest/gtest.h>

#include <random>

#include "matex/errors.hpp"
#include "test_support.hpp"

namespace matex {
namespace {

using testing::all_subsets;
using testing::brute_circuits;
using testing::brute_forest;
using testing::brute_gf2_independent;
using testing::brute_rank;
using testing::brute_support;
using testing::is_circuit;
using testing::L;
using testing::random_subset;

// Known examples ------------------------------------------------------------

TEST(Independence, KnownExamples) {
  auto u24 = testing::uniform(2, 4);
  auto k4 = testing::k4();
  auto i3 = testing::doubled_identity(3);
  EXPECT_TRUE(u24->is_independent(L(*u24, {"1", "2"})));
  EXPECT_TRUE(k4->is_independent(L(*k4, {"e4", "e5", "e6"})));
  EXPECT_FALSE(i3->is_independent(L(*i3, {"1", "4"})));
}

TEST(Rank, KnownExamples) {
  auto u24 = testing::uniform(2, 4);
  auto k4 = testing::k4();
  auto i3 = testing::doubled_identity(3);
  EXPECT_EQ(u24->rank_of(L(*u24, {"1", "2", "3"})), 2u);
  EXPECT_EQ(k4->rank_of(k4->ground_set()), 3u);
  EXPECT_EQ(i3->rank_of(L(*i3, {"1", "2", "4"})), 2u);
  EXPECT_EQ(k4->rank_of({}), 0u);
}

TEST(IsBase, KnownExamples) {
  auto u24 = testing::uniform(2, 4);
  auto k4 = testing::k4();
  auto r4 = testing::rank4_fixture();
  EXPECT_TRUE(u24->is_base(L(*u24, {"1", "3"})));
  EXPECT_FALSE(k4->is_base(L(*k4, {"e1", "e2", "e4"})));
  EXPECT_TRUE(r4->is_base(L(*r4, {"5", "6", "7", "8"})));
}

TEST(FundamentalCircuit, KnownExamples) {
  auto u24 = testing::uniform(2, 4);
  auto k4 = testing::k4();
  auto i3 = testing::doubled_identity(3);
  EXPECT_EQ(i3->fundamental_circuit(L(*i3, {"4", "5", "6"}), testing::id(*i3, "1")),
            L(*i3, {"4"}));
  EXPECT_EQ(u24->fundamental_circuit(L(*u24, {"3", "4"}), testing::id(*u24, "1")),
            L(*u24, {"3", "4"}));
  EXPECT_EQ(k4->fundamental_circuit(L(*k4, {"e4", "e5", "e6"}), testing::id(*k4, "e1")),
            L(*k4, {"e5", "e6"}));
  EXPECT_EQ(k4->closed_circuit(L(*k4, {"e4", "e5", "e6"}), testing::id(*k4, "e1")),
            L(*k4, {"e1", "e5", "e6"}));
}

TEST(FundamentalCircuit, Preconditions) {
  auto k4 = testing::k4();
  auto i3 = testing::doubled_identity(3);
  EXPECT_THROW(k4->fundamental_circuit(L(*k4, {"e1", "e2", "e4"}), 5), PreconditionError);
  EXPECT_THROW(i3->fundamental_circuit(L(*i3, {"1", "2"}), testing::id(*i3, "3")),
               NotSpannedError);
  EXPECT_THROW(k4->fundamental_circuit(L(*k4, {"e1"}), 0), PreconditionError);
}

TEST(Restrict, KnownExamples) {
  auto u24 = testing::uniform(2, 4);
  auto r = restrict(*u24, L(*u24, {"1", "2", "3"}));
  EXPECT_EQ(r.matroid->ground_size(), 3u);
  EXPECT_EQ(r.matroid->rank(), 2u);
  for (const auto& s : all_subsets(r.matroid->ground_set())) {
    if (s.size() == 2) EXPECT_TRUE(r.matroid->is_base(s));
  }

  auto k4 = testing::k4();
  auto rk = restrict(*k4, L(*k4, {"e1", "e2", "e3", "e4"}));
  EXPECT_EQ(rk.matroid->rank(), 3u);
  EXPECT_FALSE(rk.matroid->is_independent(L(*rk.matroid, {"e1", "e2", "e4"})));
  EXPECT_EQ(rk.matroid->kind(), MatroidKind::kGraphic);

  auto empty = restrict(*k4, {});
  EXPECT_EQ(empty.matroid->ground_size(), 0u);
  EXPECT_EQ(empty.matroid->rank(), 0u);
}

TEST(Errors, InvalidIdsAndLabels) {
  auto u24 = testing::uniform(2, 4);
  try {
    u24->is_independent(ElementSet{0, 9});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find('9'), std::string::npos);
  }
  EXPECT_THROW(u24->rank_of(ElementSet{4}), DomainError);
  EXPECT_THROW(u24->is_base(ElementSet{4}), DomainError);
  EXPECT_THROW(L(*u24, {"7"}), DomainError);
  EXPECT_THROW(L(*u24, {"1", "1"}), DomainError);
  EXPECT_THROW(UniformMatroid(5, 4), DomainError);
  EXPECT_THROW(GraphicMatroid(2, {{0, 2}}), DomainError);
  EXPECT_THROW(Gf2Matroid({{1, 2}}), DomainError);
  EXPECT_THROW(UniformMatroid(1, std::vector<std::string>{"a", "a"}), DomainError);
}

TEST(Graphic, LoopsAndParallelEdges) {
  GraphicMatroid g(3, {{0, 1}, {0, 1}, {2, 2}, {1, 2}});
  EXPECT_FALSE(g.is_independent(ElementSet{2}));
  EXPECT_FALSE(g.is_independent(ElementSet{0, 1}));
  EXPECT_TRUE(g.is_independent(ElementSet{0, 3}));
  EXPECT_EQ(g.rank(), 2u);
  EXPECT_EQ(g.fundamental_circuit(ElementSet{0, 3}, 1), ElementSet{0});
  EXPECT_EQ(g.fundamental_circuit(ElementSet{0, 3}, 2), ElementSet{});
}

TEST(Rational, ExactArithmetic) {
  // x, y, z, u = 2x, v = (1/2, 1, 1), w = (1, -3/4, 1).
  auto e = [](const char* p, const char* q = "1") { return RationalEntry{p, q}; };
  RationalMatroid m({{e("1"), e("0"), e("0"), e("2"), e("1", "2"), e("1")},
                     {e("0"), e("1"), e("0"), e("0"), e("1"), e("-3", "4")},
                     {e("0"), e("0"), e("1"), e("0"), e("1"), e("1")}},
                    {"x", "y", "z", "u", "v", "w"});
  EXPECT_EQ(m.rank(), 3u);
  EXPECT_FALSE(m.is_independent(L(m, {"x", "u"})));
  EXPECT_TRUE(m.is_base(L(m, {"u", "v", "w"})));
  EXPECT_EQ(m.fundamental_circuit(L(m, {"y", "z", "u"}), *m.find_label("x")), L(m, {"u"}));
  EXPECT_EQ(m.fundamental_circuit(L(m, {"x", "y", "z"}), *m.find_label("v")),
            L(m, {"x", "y", "z"}));
  EXPECT_EQ(parse_rational("6/-4").numerator, "-3");
  EXPECT_EQ(parse_rational("6/-4").denominator, "2");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
}

// Oracle cross-checks -------------------------------------------------------

std::vector<std::shared_ptr<const Matroid>> sample_matroids() {
  std::vector<std::shared_ptr<const Matroid>> out;
  out.push_back(testing::uniform(3, 7));
  out.push_back(testing::k4());
  // W4 plus a parallel edge and a loop.
  out.push_back(std::make_shared<GraphicMatroid>(
      5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3},
                           {0, 1}, {2, 2}}));
  out.push_back(testing::rank4_fixture());
  std::mt19937_64 rng(17);
  std::bernoulli_distribution bit(0.5);
  std::vector<std::vector<std::uint8_t>> rows(4, std::vector<std::uint8_t>(9));
  for (auto& row : rows) {
    for (auto& b : row) b = bit(rng);
  }
  out.push_back(std::make_shared<Gf2Matroid>(rows));
  auto e = [](const char* p, const char* q = "1") { return RationalEntry{p, q}; };
  out.push_back(std::make_shared<RationalMatroid>(
      std::vector<std::vector<RationalEntry>>{
          {e("1"), e("0"), e("0"), e("2"), e("1", "2"), e("1"), e("1")},
          {e("0"), e("1"), e("0"), e("0"), e("1"), e("-3", "4"), e("1")},
          {e("0"), e("0"), e("1"), e("0"), e("1"), e("1"), e("0")}}));
  return out;
}

TEST(OracleAgreement, GraphicMatchesComponentCount) {
  for (const auto& m : sample_matroids()) {
    auto g = std::dynamic_pointer_cast<const GraphicMatroid>(m);
    if (!g) continue;
    for (const auto& s : all_subsets(g->ground_set())) {
      ASSERT_EQ(g->is_independent(s), brute_forest(*g, s)) << g->format(s);
    }
  }
}

TEST(OracleAgreement, Gf2MatchesSubsetSums) {
  for (const auto& m : sample_matroids()) {
    auto g = std::dynamic_pointer_cast<const Gf2Matroid>(m);
    if (!g) continue;
    for (const auto& s : all_subsets(g->ground_set())) {
      ASSERT_EQ(g->is_independent(s), brute_gf2_independent(*g, s)) << g->format(s);
    }
  }
}

TEST(OracleAgreement, UniformMatchesCardinality) {
  auto u = testing::uniform(3, 7);
  for (const auto& s : all_subsets(u->ground_set())) {
    ASSERT_EQ(u->is_independent(s), s.size() <= 3);
  }
}

TEST(OracleAgreement, RankMatchesLargestIndependentSubset) {
  std::mt19937_64 rng(3);
  for (const auto& m : sample_matroids()) {
    for (int i = 0; i < 60; ++i) {
      auto s = random_subset(rng, m->ground_size());
      ASSERT_EQ(m->rank_of(s), brute_rank(*m, s)) << m->format(s);
    }
    EXPECT_EQ(m->rank(), brute_rank(*m, m->ground_set()));
  }
}

TEST(OracleAgreement, SupportMatchesUniqueCircuit) {
  std::mt19937_64 rng(4);
  for (const auto& m : sample_matroids()) {
    int checked = 0;
    for (int i = 0; i < 400 && checked < 80; ++i) {
      auto s = random_subset(rng, m->ground_size(), 0.4);
      if (!m->is_independent(s)) continue;
      for (ElementId x = 0; x < m->ground_size(); ++x) {
        if (s.contains(x) || m->is_independent(s.with(x))) continue;
        auto fast = m->fundamental_circuit(s, x);
        ASSERT_EQ(fast, m->generic_fundamental_circuit(s, x));
        ASSERT_EQ(fast, brute_support(*m, s, x));
        ASSERT_TRUE(is_circuit(*m, fast.with(x)));
        ++checked;
      }
    }
    EXPECT_GT(checked, 0) << to_string(m->kind());
  }
}

// Axioms --------------------------------------------------------------------

TEST(Axioms, Hereditary) {
  std::mt19937_64 rng(5);
  for (const auto& m : sample_matroids()) {
    for (int i = 0; i < 100; ++i) {
      auto s = random_subset(rng, m->ground_size(), 0.35);
      if (!m->is_independent(s)) continue;
      for (const auto& sub : all_subsets(s)) ASSERT_TRUE(m->is_independent(sub));
    }
  }
}

TEST(Axioms, IndependenceExchange) {
  std::mt19937_64 rng(6);
  for (const auto& m : sample_matroids()) {
    for (int i = 0; i < 300; ++i) {
      auto s = random_subset(rng, m->ground_size(), 0.3);
      auto t = random_subset(rng, m->ground_size(), 0.5);
      if (t.size() <= s.size() || !m->is_independent(s) || !m->is_independent(t)) continue;
      bool extended = false;
      for (ElementId x : t - s) extended = extended || m->is_independent(s.with(x));
      ASSERT_TRUE(extended) << m->format(s) << " " << m->format(t);
    }
  }
}

TEST(Axioms, RankMonotoneAndSubmodular) {
  std::mt19937_64 rng(7);
  for (const auto& m : sample_matroids()) {
    for (int i = 0; i < 200; ++i) {
      auto s = random_subset(rng, m->ground_size());
      auto t = random_subset(rng, m->ground_size());
      ASSERT_LE(m->rank_of(s & t), m->rank_of(s));
      ASSERT_LE(m->rank_of(s), m->rank_of(s | t));
      ASSERT_LE(m->rank_of(s | t) + m->rank_of(s & t), m->rank_of(s) + m->rank_of(t));
    }
  }
}

TEST(Axioms, RestrictionCommutesWithIndependence) {
  std::mt19937_64 rng(8);
  for (const auto& m : sample_matroids()) {
    for (int round = 0; round < 5; ++round) {
      auto keep = random_subset(rng, m->ground_size(), 0.7);
      auto r = restrict(*m, keep);
      ASSERT_EQ(r.matroid->kind(), m->kind());
      ASSERT_EQ(r.matroid->ground_size(), keep.size());
      for (const auto& s : all_subsets(r.matroid->ground_set())) {
        auto parent = r.to_parent_set(s);
        ASSERT_EQ(r.matroid->is_independent(s), m->is_independent(parent));
        ASSERT_EQ(r.from_parent_set(parent), s);
        ASSERT_EQ(r.matroid->format(s), m->format(parent));
      }
    }
  }
}

// For circuits C1 != C2 from fundamental_circuit with x in both and y in C1
// only, (C1 | C2) - x contains a circuit through y.
TEST(Axioms, StrongCircuitElimination) {
  std::mt19937_64 rng(9);
  for (const auto& m : sample_matroids()) {
    std::vector<ElementSet> circuits;
    for (int i = 0; i < 300 && circuits.size() < 25; ++i) {
      auto s = random_subset(rng, m->ground_size(), 0.4);
      if (!m->is_independent(s)) continue;
      for (ElementId x = 0; x < m->ground_size(); ++x) {
        if (!s.contains(x) && !m->is_independent(s.with(x))) {
          circuits.push_back(m->closed_circuit(s, x));
        }
      }
    }
    std::size_t tested = 0;
    for (const auto& c1 : circuits) {
      for (const auto& c2 : circuits) {
        if (c1 == c2 || !c1.intersects(c2) || (c1 - c2).empty()) continue;
        const ElementId x = *(c1 & c2).min();
        const ElementId y = *(c1 - c2).min();
        const ElementSet within = (c1 | c2).without(x);
        bool found = false;
        for (const auto& c3 : brute_circuits(*m, within)) found = found || c3.contains(y);
        ASSERT_TRUE(found) << m->format(c1) << " " << m->format(c2);
        ++tested;
      }
    }
    EXPECT_GT(tested, 0u) << to_string(m->kind());
  }
}

}  // namespace
}  // namespace matex
