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

#include "matex/element_set.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <unordered_set>

namespace matex {
namespace {

std::set<ElementId> as_std(const ElementSet& s) {
  return {s.begin(), s.end()};
}

TEST(ElementSet, BasicMembership) {
  ElementSet s{3, 70, 1};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(70));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.to_vector(), (std::vector<ElementId>{1, 3, 70}));
  EXPECT_EQ(*s.min(), 1u);
  EXPECT_EQ(s.extent(), 71u);
  s.erase(70);
  EXPECT_EQ(s.words().size(), 1u);
  EXPECT_EQ(s, (ElementSet{1, 3}));
}

TEST(ElementSet, EmptyAndRange) {
  ElementSet e;
  EXPECT_TRUE(e.empty());
  EXPECT_FALSE(e.min().has_value());
  EXPECT_EQ(e.begin(), e.end());
  EXPECT_EQ(ElementSet::range(0), e);
  EXPECT_EQ(ElementSet::range(130).size(), 130u);
  EXPECT_TRUE(ElementSet::range(130).contains(129));
  EXPECT_FALSE(ElementSet::range(130).contains(130));
}

TEST(ElementSet, EraseToEmptyEqualsDefault) {
  ElementSet s{100};
  s.erase(100);
  EXPECT_EQ(s, ElementSet{});
  EXPECT_EQ(s.hash(), ElementSet{}.hash());
}

TEST(ElementSet, AlgebraMatchesStdSet) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<ElementId> pick(0, 150);
  for (int round = 0; round < 200; ++round) {
    ElementSet x, y;
    std::set<ElementId> sx, sy;
    for (int i = 0; i < 20; ++i) {
      auto e = pick(rng);
      x.insert(e);
      sx.insert(e);
      auto f = pick(rng);
      y.insert(f);
      sy.insert(f);
    }
    std::set<ElementId> uni, inter, diff, sym;
    std::set_union(sx.begin(), sx.end(), sy.begin(), sy.end(), std::inserter(uni, uni.end()));
    std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(),
                          std::inserter(inter, inter.end()));
    std::set_difference(sx.begin(), sx.end(), sy.begin(), sy.end(), std::inserter(diff, diff.end()));
    std::set_symmetric_difference(sx.begin(), sx.end(), sy.begin(), sy.end(),
                                  std::inserter(sym, sym.end()));
    EXPECT_EQ(as_std(x | y), uni);
    EXPECT_EQ(as_std(x & y), inter);
    EXPECT_EQ(as_std(x - y), diff);
    EXPECT_EQ(as_std(x ^ y), sym);
    EXPECT_EQ(x.intersects(y), !inter.empty());
    EXPECT_TRUE((x & y).is_subset_of(x));
    EXPECT_EQ(x.is_subset_of(y), std::includes(sy.begin(), sy.end(), sx.begin(), sx.end()));
    EXPECT_EQ((x - y) | (x & y), x);
  }
}

TEST(ElementSet, OrderingIsLexicographicOnSortedMembers) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<ElementId> pick(0, 80);
  for (int round = 0; round < 500; ++round) {
    ElementSet x, y;
    for (int i = 0; i < 4; ++i) {
      x.insert(pick(rng));
      y.insert(pick(rng));
    }
    auto vx = x.to_vector();
    auto vy = y.to_vector();
    EXPECT_EQ(x < y, vx < vy) << to_string(x) << " vs " << to_string(y);
    EXPECT_EQ(x == y, vx == vy);
  }
}

TEST(ElementSet, SwappedAndHash) {
  ElementSet s{1, 2};
  EXPECT_EQ(s.swapped(1, 5), (ElementSet{2, 5}));
  std::unordered_set<ElementSet> bag{s, s.swapped(1, 5), ElementSet{2, 1}};
  EXPECT_EQ(bag.size(), 2u);
  EXPECT_EQ(to_string(ElementSet{0, 4}), "{0, 4}");
}

}  // namespace
}  // namespace matex
