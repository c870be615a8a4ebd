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

#include <algorithm>
#include <sstream>

namespace matex {

void ElementSet::const_iterator::advance(ElementId from) {
  const auto& words = set_->words_;
  const auto limit = static_cast<ElementId>(words.size() * 64);
  std::size_t w = from / 64;
  if (w >= words.size()) {
    current_ = limit;
    return;
  }
  std::uint64_t bits = words[w] & (~std::uint64_t{0} << (from % 64));
  while (bits == 0) {
    if (++w == words.size()) {
      current_ = limit;
      return;
    }
    bits = words[w];
  }
  current_ = static_cast<ElementId>(w * 64 + std::countr_zero(bits));
}

ElementSet::ElementSet(std::initializer_list<ElementId> ids) {
  for (ElementId id : ids) insert(id);
}

ElementSet::ElementSet(std::span<const ElementId> ids) {
  for (ElementId id : ids) insert(id);
}

ElementSet ElementSet::range(std::size_t count) {
  ElementSet s;
  s.words_.assign((count + 63) / 64, ~std::uint64_t{0});
  if (count % 64 != 0) {
    s.words_.back() = (std::uint64_t{1} << (count % 64)) - 1;
  }
  return s;
}

void ElementSet::insert(ElementId id) {
  const std::size_t w = id / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (id % 64);
}

void ElementSet::erase(ElementId id) {
  const std::size_t w = id / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (id % 64));
  trim();
}

std::size_t ElementSet::size() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t ElementSet::extent() const {
  if (words_.empty()) return 0;
  return (words_.size() - 1) * 64 + 64 -
         static_cast<std::size_t>(std::countl_zero(words_.back()));
}

std::optional<ElementId> ElementSet::min() const {
  if (empty()) return std::nullopt;
  return *begin();
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  trim();
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
  trim();
  return *this;
}

ElementSet& ElementSet::operator^=(const ElementSet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::vector<ElementId> ElementSet::to_vector() const {
  std::vector<ElementId> out;
  out.reserve(size());
  for (ElementId id : *this) out.push_back(id);
  return out;
}

std::strong_ordering operator<=>(const ElementSet& x, const ElementSet& y) {
  auto i = x.begin();
  auto j = y.begin();
  const auto xe = x.end();
  const auto ye = y.end();
  for (; i != xe && j != ye; ++i, ++j) {
    if (*i != *j) return *i <=> *j;
  }
  if (i == xe && j == ye) return std::strong_ordering::equal;
  return i == xe ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t ElementSet::hash() const {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

void ElementSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

std::string to_string(const ElementSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (ElementId id : s) {
    if (!first) out << ", ";
    out << id;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace matex
