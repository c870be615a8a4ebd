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

#ifndef MATEX_ELEMENT_SET_HPP_
#define MATEX_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace matex {

// Dense index of a ground-set element, in [0, ground_size).
using ElementId = std::uint32_t;

// Set of element ids backed by a growable bitset. Iteration is in
// increasing id order. Trailing zero words are never stored, so equal sets
// compare equal regardless of how they were built.
class ElementSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElementId;
    using difference_type = std::ptrdiff_t;
    using pointer = const ElementId*;
    using reference = ElementId;

    const_iterator() = default;

    ElementId operator*() const { return current_; }
    const_iterator& operator++() {
      advance(current_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const const_iterator& x, const const_iterator& y) {
      return x.current_ == y.current_;
    }

   private:
    friend class ElementSet;
    const_iterator(const ElementSet* set, ElementId start) : set_(set) {
      advance(start);
    }
    void advance(ElementId from);

    const ElementSet* set_ = nullptr;
    ElementId current_ = 0;
  };

  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids);
  explicit ElementSet(std::span<const ElementId> ids);

  // {0, 1, ..., count-1}
  static ElementSet range(std::size_t count);

  bool contains(ElementId id) const {
    const std::size_t w = id / 64;
    return w < words_.size() && ((words_[w] >> (id % 64)) & 1U);
  }
  void insert(ElementId id);
  void erase(ElementId id);

  std::size_t size() const;
  bool empty() const { return words_.empty(); }
  // Largest id plus one, or zero for the empty set.
  std::size_t extent() const;
  std::optional<ElementId> min() const;

  ElementSet with(ElementId id) const {
    ElementSet s = *this;
    s.insert(id);
    return s;
  }
  ElementSet without(ElementId id) const {
    ElementSet s = *this;
    s.erase(id);
    return s;
  }
  // this - out + in, the one-element swap used everywhere in exchange code.
  ElementSet swapped(ElementId out, ElementId in) const {
    ElementSet s = *this;
    s.erase(out);
    s.insert(in);
    return s;
  }

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);
  ElementSet& operator^=(const ElementSet& other);
  friend ElementSet operator|(ElementSet x, const ElementSet& y) { return x |= y; }
  friend ElementSet operator&(ElementSet x, const ElementSet& y) { return x &= y; }
  friend ElementSet operator-(ElementSet x, const ElementSet& y) { return x -= y; }
  friend ElementSet operator^(ElementSet x, const ElementSet& y) { return x ^= y; }

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const {
    return const_iterator(this, static_cast<ElementId>(words_.size() * 64));
  }

  std::vector<ElementId> to_vector() const;
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  // Lexicographic order on the increasing member sequences.
  friend std::strong_ordering operator<=>(const ElementSet& x,
                                          const ElementSet& y);

  std::size_t hash() const;

 private:
  void trim();

  std::vector<std::uint64_t> words_;
};

// "{0, 3, 5}" using raw ids; label-aware printing lives on Matroid.
std::string to_string(const ElementSet& s);

}  // namespace matex

template <>
struct std::hash<matex::ElementSet> {
  std::size_t operator()(const matex::ElementSet& s) const noexcept {
    return s.hash();
  }
};

#endif  // MATEX_ELEMENT_SET_HPP_
