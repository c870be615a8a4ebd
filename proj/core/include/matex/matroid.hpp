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

#ifndef MATEX_MATROID_HPP_
#define MATEX_MATROID_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matex/element_set.hpp"

namespace matex {

enum class MatroidKind { kUniform, kGraphic, kLinearGf2, kLinearRational };

std::string_view to_string(MatroidKind kind);

// Immutable independence oracle over the ground set {0, ..., ground_size-1}.
//
// Every public query validates its element ids and throws DomainError naming
// the offending id. Derived classes only implement the unchecked hooks.
// Instances are safe for concurrent reads.
class Matroid {
 public:
  virtual ~Matroid() = default;
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  virtual MatroidKind kind() const = 0;

  std::size_t ground_size() const { return labels_.size(); }
  ElementSet ground_set() const { return ElementSet::range(ground_size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(ElementId id) const;
  std::optional<ElementId> find_label(std::string_view label) const;
  // Throws DomainError for unknown labels.
  ElementSet parse_labels(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const ElementSet& s) const;
  std::string format(const ElementSet& s) const;

  bool is_independent(const ElementSet& s) const;
  std::size_t rank_of(const ElementSet& s) const;
  // Rank of the whole ground set, computed once.
  std::size_t rank() const;
  bool is_base(const ElementSet& s) const;

  // C(I, x): the unique minimal subset of the independent set `independent`
  // that spans x. Throws PreconditionError if `independent` is dependent or
  // already holds x, and NotSpannedError if independent + x is independent.
  // Uses the representation's fast path when it has one.
  ElementSet fundamental_circuit(const ElementSet& independent,
                                 ElementId x) const;
  // C+(I, x) = C(I, x) + x, a circuit.
  ElementSet closed_circuit(const ElementSet& independent, ElementId x) const {
    return fundamental_circuit(independent, x).with(x);
  }

  // Oracle-only support computation: {y in I : (I + x) - y independent}.
  // Same preconditions as fundamental_circuit.
  ElementSet generic_fundamental_circuit(const ElementSet& independent,
                                         ElementId x) const;

  // Restriction to `keep`, relabelled densely in increasing parent-id order.
  // The result has the same representation kind and keeps the parent labels.
  std::shared_ptr<const Matroid> restrict_to(const ElementSet& keep) const;

  void validate(const ElementSet& s) const;
  void validate(ElementId id) const;

 protected:
  explicit Matroid(std::vector<std::string> labels);

  virtual bool independent_impl(const ElementSet& s) const = 0;
  // Greedy by default; representations with a direct rank override this.
  virtual std::size_t rank_impl(const ElementSet& s) const;
  virtual ElementSet support_impl(const ElementSet& independent,
                                  ElementId x) const;
  // `keep` is sorted, non-empty-checked by the caller.
  virtual std::shared_ptr<const Matroid> restrict_impl(
      const std::vector<ElementId>& keep,
      std::vector<std::string> labels) const = 0;

 private:
  void check_support_preconditions(const ElementSet& independent,
                                   ElementId x) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, ElementId> label_index_;
  mutable std::once_flag rank_once_;
  mutable std::size_t full_rank_ = 0;
};

// Labels "1", ..., "n"; the default for programmatically built matroids.
std::vector<std::string> numbered_labels(std::size_t n,
                                         std::string_view prefix = "");

// U(k, n): every set of at most k elements is independent.
class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(std::size_t k, std::size_t n);
  UniformMatroid(std::size_t k, std::vector<std::string> labels);

  MatroidKind kind() const override { return MatroidKind::kUniform; }
  std::size_t k() const { return k_; }

 protected:
  bool independent_impl(const ElementSet& s) const override;
  std::size_t rank_impl(const ElementSet& s) const override;
  ElementSet support_impl(const ElementSet& independent,
                          ElementId x) const override;
  std::shared_ptr<const Matroid> restrict_impl(
      const std::vector<ElementId>& keep,
      std::vector<std::string> labels) const override;

 private:
  std::size_t k_;
};

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Cycle matroid of a multigraph. Loops and parallel edges are allowed; a loop
// is dependent on its own. Vertices are 0-based.
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(std::size_t vertex_count, std::vector<Edge> edges);
  GraphicMatroid(std::size_t vertex_count, std::vector<Edge> edges,
                 std::vector<std::string> labels);

  MatroidKind kind() const override { return MatroidKind::kGraphic; }
  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

 protected:
  bool independent_impl(const ElementSet& s) const override;
  std::size_t rank_impl(const ElementSet& s) const override;
  // Edges on the forest path joining the endpoints of x.
  ElementSet support_impl(const ElementSet& independent,
                          ElementId x) const override;
  std::shared_ptr<const Matroid> restrict_impl(
      const std::vector<ElementId>& keep,
      std::vector<std::string> labels) const override;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

// Column matroid of a matrix over GF(2). Each column is packed into 64-bit
// words, one bit per row.
class Gf2Matroid final : public Matroid {
 public:
  // rows[r][c] is entry (r, c); all rows must have equal length.
  explicit Gf2Matroid(const std::vector<std::vector<std::uint8_t>>& rows);
  Gf2Matroid(const std::vector<std::vector<std::uint8_t>>& rows,
             std::vector<std::string> labels);

  MatroidKind kind() const override { return MatroidKind::kLinearGf2; }
  std::size_t row_count() const { return row_count_; }
  bool entry(std::size_t row, std::size_t col) const;

 protected:
  bool independent_impl(const ElementSet& s) const override;
  std::size_t rank_impl(const ElementSet& s) const override;
  // Reads the support off the elimination that expresses x in the columns
  // of the independent set.
  ElementSet support_impl(const ElementSet& independent,
                          ElementId x) const override;
  std::shared_ptr<const Matroid> restrict_impl(
      const std::vector<ElementId>& keep,
      std::vector<std::string> labels) const override;

 private:
  using Column = std::vector<std::uint64_t>;
  Gf2Matroid(std::size_t row_count, std::vector<Column> columns,
             std::vector<std::string> labels);

  std::size_t row_count_ = 0;
  std::vector<Column> columns_;
};

// Exact rational p/q with q > 0 and gcd(p, q) = 1. Kept as a pair of decimal
// strings at the interface so the boost type stays out of public headers.
struct RationalEntry {
  std::string numerator = "0";
  std::string denominator = "1";
};

// Column matroid of a matrix over the rationals, eliminated exactly.
class RationalMatroid final : public Matroid {
 public:
  explicit RationalMatroid(const std::vector<std::vector<RationalEntry>>& rows);
  RationalMatroid(const std::vector<std::vector<RationalEntry>>& rows,
                  std::vector<std::string> labels);
  ~RationalMatroid() override;

  MatroidKind kind() const override { return MatroidKind::kLinearRational; }
  std::size_t row_count() const;
  RationalEntry entry(std::size_t row, std::size_t col) const;

 protected:
  bool independent_impl(const ElementSet& s) const override;
  std::size_t rank_impl(const ElementSet& s) const override;
  std::shared_ptr<const Matroid> restrict_impl(
      const std::vector<ElementId>& keep,
      std::vector<std::string> labels) const override;

 private:
  struct Matrix;
  explicit RationalMatroid(std::unique_ptr<Matrix> matrix,
                           std::vector<std::string> labels);

  std::unique_ptr<Matrix> matrix_;
};

// Parses "p/q" or "p" into a reduced RationalEntry. Throws DomainError.
RationalEntry parse_rational(std::string_view text);

// A restriction together with the map back to parent ids.
struct Restriction {
  std::shared_ptr<const Matroid> matroid;
  std::vector<ElementId> to_parent;

  ElementSet to_parent_set(const ElementSet& s) const;
  // Only members of the restricted ground set are mapped; others throw.
  ElementSet from_parent_set(const ElementSet& s) const;
};

Restriction restrict(const Matroid& m, const ElementSet& keep);

}  // namespace matex

#endif  // MATEX_MATROID_HPP_
