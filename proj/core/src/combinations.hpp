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

#ifndef MATEX_SRC_COMBINATIONS_HPP_
#define MATEX_SRC_COMBINATIONS_HPP_

#include <cstddef>
#include <vector>

#include "matex/element_set.hpp"

namespace matex::detail {

// Visits every k-subset of `items` in lexicographic order of positions.
// Stops early when `visit` returns false; returns false in that case.
template <typename Visit>
bool for_each_combination(const std::vector<ElementId>& items, std::size_t k,
                          Visit&& visit) {
  if (k > items.size()) return true;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    ElementSet chosen;
    for (std::size_t i : pick) chosen.insert(items[i]);
    if (!visit(chosen)) return false;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) return true;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace matex::detail

#endif  // MATEX_SRC_COMBINATIONS_HPP_
