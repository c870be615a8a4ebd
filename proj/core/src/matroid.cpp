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

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <queue>
#include <sstream>

#include "matex/errors.hpp"

namespace matex {

namespace mp = boost::multiprecision;

std::string_view to_string(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kUniform:
      return "uniform";
    case MatroidKind::kGraphic:
      return "graphic";
    case MatroidKind::kLinearGf2:
      return "linear-gf2";
    case MatroidKind::kLinearRational:
      return "linear-rational";
  }
  return "unknown";
}

std::vector<std::string> numbered_labels(std::size_t n, std::string_view prefix) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out.push_back(std::string(prefix) + std::to_string(i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matroid

Matroid::Matroid(std::vector<std::string> labels) : labels_(std::move(labels)) {
  label_index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw DomainError("element " + std::to_string(i) + " has an empty label");
    }
    auto [it, inserted] =
        label_index_.emplace(labels_[i], static_cast<ElementId>(i));
    if (!inserted) throw DomainError("duplicate element label '" + labels_[i] + "'");
  }
}

const std::string& Matroid::label(ElementId id) const {
  validate(id);
  return labels_[id];
}

std::optional<ElementId> Matroid::find_label(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

ElementSet Matroid::parse_labels(const std::vector<std::string>& labels) const {
  ElementSet out;
  for (const auto& l : labels) {
    auto id = find_label(l);
    if (!id) throw DomainError("unknown element label '" + l + "'");
    if (out.contains(*id)) throw DomainError("element label '" + l + "' repeated");
    out.insert(*id);
  }
  return out;
}

std::vector<std::string> Matroid::labels_of(const ElementSet& s) const {
  validate(s);
  std::vector<std::string> out;
  for (ElementId id : s) out.push_back(labels_[id]);
  return out;
}

std::string Matroid::format(const ElementSet& s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : labels_of(s)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

void Matroid::validate(ElementId id) const {
  if (id >= ground_size()) {
    throw DomainError("element id " + std::to_string(id) +
                      " outside ground set of size " +
                      std::to_string(ground_size()));
  }
}

void Matroid::validate(const ElementSet& s) const {
  if (s.extent() > ground_size()) {
    // The largest member is the offending one worth naming.
    validate(static_cast<ElementId>(s.extent() - 1));
  }
}

bool Matroid::is_independent(const ElementSet& s) const {
  validate(s);
  return independent_impl(s);
}

std::size_t Matroid::rank_of(const ElementSet& s) const {
  validate(s);
  return rank_impl(s);
}

std::size_t Matroid::rank() const {
  std::call_once(rank_once_, [this] { full_rank_ = rank_impl(ground_set()); });
  return full_rank_;
}

bool Matroid::is_base(const ElementSet& s) const {
  validate(s);
  return s.size() == rank() && independent_impl(s);
}

std::size_t Matroid::rank_impl(const ElementSet& s) const {
  ElementSet kept;
  for (ElementId id : s) {
    ElementSet candidate = kept.with(id);
    if (independent_impl(candidate)) kept = std::move(candidate);
  }
  return kept.size();
}

void Matroid::check_support_preconditions(const ElementSet& independent,
                                          ElementId x) const {
  validate(independent);
  validate(x);
  if (independent.contains(x)) {
    throw PreconditionError("element " + labels_[x] +
                            " already belongs to the independent set");
  }
  if (!independent_impl(independent)) {
    throw PreconditionError("set " + format(independent) + " is dependent");
  }
  if (independent_impl(independent.with(x))) {
    throw NotSpannedError("element " + labels_[x] + " is not spanned by " +
                          format(independent));
  }
}

ElementSet Matroid::fundamental_circuit(const ElementSet& independent,
                                        ElementId x) const {
  check_support_preconditions(independent, x);
  return support_impl(independent, x);
}

ElementSet Matroid::generic_fundamental_circuit(const ElementSet& independent,
                                                ElementId x) const {
  check_support_preconditions(independent, x);
  return Matroid::support_impl(independent, x);
}

ElementSet Matroid::support_impl(const ElementSet& independent,
                                 ElementId x) const {
  // y lies on the unique circuit of I + x exactly when removing it
  // breaks that circuit.
  const ElementSet extended = independent.with(x);
  ElementSet support;
  for (ElementId y : independent) {
    if (independent_impl(extended.without(y))) support.insert(y);
  }
  return support;
}

std::shared_ptr<const Matroid> Matroid::restrict_to(const ElementSet& keep) const {
  validate(keep);
  std::vector<ElementId> ids = keep.to_vector();
  std::vector<std::string> labels;
  labels.reserve(ids.size());
  for (ElementId id : ids) labels.push_back(labels_[id]);
  return restrict_impl(ids, std::move(labels));
}

ElementSet Restriction::to_parent_set(const ElementSet& s) const {
  ElementSet out;
  for (ElementId id : s) {
    if (id >= to_parent.size()) {
      throw DomainError("element id " + std::to_string(id) +
                        " outside the restricted ground set");
    }
    out.insert(to_parent[id]);
  }
  return out;
}

ElementSet Restriction::from_parent_set(const ElementSet& s) const {
  ElementSet out;
  for (ElementId id : s) {
    auto it = std::lower_bound(to_parent.begin(), to_parent.end(), id);
    if (it == to_parent.end() || *it != id) {
      throw DomainError("parent element " + std::to_string(id) +
                        " is not part of the restriction");
    }
    out.insert(static_cast<ElementId>(it - to_parent.begin()));
  }
  return out;
}

Restriction restrict(const Matroid& m, const ElementSet& keep) {
  return Restriction{m.restrict_to(keep), keep.to_vector()};
}

// ---------------------------------------------------------------------------
// Uniform

UniformMatroid::UniformMatroid(std::size_t k, std::size_t n)
    : UniformMatroid(k, numbered_labels(n)) {}

UniformMatroid::UniformMatroid(std::size_t k, std::vector<std::string> labels)
    : Matroid(std::move(labels)), k_(k) {
  if (k_ > ground_size()) {
    throw DomainError("uniform matroid needs k <= n, got k=" + std::to_string(k_) +
                      " n=" + std::to_string(ground_size()));
  }
}

bool UniformMatroid::independent_impl(const ElementSet& s) const {
  return s.size() <= k_;
}

std::size_t UniformMatroid::rank_impl(const ElementSet& s) const {
  return std::min(s.size(), k_);
}

ElementSet UniformMatroid::support_impl(const ElementSet& independent,
                                        ElementId) const {
  // A spanned non-member means |I| = k, and every k+1 set is a circuit.
  return independent;
}

std::shared_ptr<const Matroid> UniformMatroid::restrict_impl(
    const std::vector<ElementId>& keep, std::vector<std::string> labels) const {
  return std::make_shared<UniformMatroid>(std::min(k_, keep.size()),
                                          std::move(labels));
}

// ---------------------------------------------------------------------------
// Graphic

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // False if x and y were already joined.
  bool unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[y] = x;
    return true;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

GraphicMatroid::GraphicMatroid(std::size_t vertex_count, std::vector<Edge> edges)
    : GraphicMatroid(vertex_count, edges, numbered_labels(edges.size(), "e")) {}

GraphicMatroid::GraphicMatroid(std::size_t vertex_count, std::vector<Edge> edges,
                               std::vector<std::string> labels)
    : Matroid(std::move(labels)),
      vertex_count_(vertex_count),
      edges_(std::move(edges)) {
  if (edges_.size() != ground_size()) {
    throw DomainError("graphic matroid: " + std::to_string(edges_.size()) +
                      " edges but " + std::to_string(ground_size()) + " labels");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u >= vertex_count_ || edges_[i].v >= vertex_count_) {
      throw DomainError("edge " + this->labels()[i] + " has an endpoint outside [0, " +
                        std::to_string(vertex_count_) + ")");
    }
  }
}

bool GraphicMatroid::independent_impl(const ElementSet& s) const {
  DisjointSets components(vertex_count_);
  for (ElementId id : s) {
    if (!components.unite(edges_[id].u, edges_[id].v)) return false;
  }
  return true;
}

std::size_t GraphicMatroid::rank_impl(const ElementSet& s) const {
  DisjointSets components(vertex_count_);
  std::size_t rank = 0;
  for (ElementId id : s) {
    if (components.unite(edges_[id].u, edges_[id].v)) ++rank;
  }
  return rank;
}

ElementSet GraphicMatroid::support_impl(const ElementSet& independent,
                                        ElementId x) const {
  const Edge target = edges_[x];
  if (target.u == target.v) return {};

  std::vector<std::vector<std::pair<std::uint32_t, ElementId>>> adjacent(
      vertex_count_);
  for (ElementId id : independent) {
    adjacent[edges_[id].u].emplace_back(edges_[id].v, id);
    adjacent[edges_[id].v].emplace_back(edges_[id].u, id);
  }

  constexpr ElementId kNone = ~ElementId{0};
  std::vector<ElementId> via(vertex_count_, kNone);
  std::vector<bool> seen(vertex_count_, false);
  std::queue<std::uint32_t> frontier;
  frontier.push(target.u);
  seen[target.u] = true;
  while (!frontier.empty() && !seen[target.v]) {
    const std::uint32_t at = frontier.front();
    frontier.pop();
    for (auto [next, edge] : adjacent[at]) {
      if (seen[next]) continue;
      seen[next] = true;
      via[next] = edge;
      frontier.push(next);
    }
  }

  ElementSet path;
  for (std::uint32_t at = target.v; at != target.u;) {
    const ElementId edge = via[at];
    path.insert(edge);
    at = edges_[edge].u == at ? edges_[edge].v : edges_[edge].u;
  }
  return path;
}

std::shared_ptr<const Matroid> GraphicMatroid::restrict_impl(
    const std::vector<ElementId>& keep, std::vector<std::string> labels) const {
  std::vector<Edge> kept;
  kept.reserve(keep.size());
  for (ElementId id : keep) kept.push_back(edges_[id]);
  return std::make_shared<GraphicMatroid>(vertex_count_, std::move(kept),
                                          std::move(labels));
}

// ---------------------------------------------------------------------------
// GF(2)

namespace {

using Gf2Column = std::vector<std::uint64_t>;

std::optional<std::size_t> top_bit(const Gf2Column& c) {
  for (std::size_t w = c.size(); w-- > 0;) {
    if (c[w] != 0) return w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(c[w]));
  }
  return std::nullopt;
}

void xor_into(Gf2Column& dst, const Gf2Column& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

// Row-echelon basis keyed by leading bit. Each basis vector remembers which
// input columns were summed to produce it.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t rows) : pivots_(rows) {}

  // Reduces c against the basis; returns true and stores it if it is
  // independent of what was inserted so far.
  bool insert(Gf2Column c, ElementSet combination) {
    while (auto bit = top_bit(c)) {
      auto& slot = pivots_[*bit];
      if (!slot) {
        slot.emplace(Entry{std::move(c), std::move(combination)});
        return true;
      }
      xor_into(c, slot->vector);
      combination ^= slot->combination;
    }
    return false;
  }

  // The combination of inserted columns that sums to c, if c is in the span.
  std::optional<ElementSet> express(Gf2Column c) const {
    ElementSet combination;
    while (auto bit = top_bit(c)) {
      const auto& slot = pivots_[*bit];
      if (!slot) return std::nullopt;
      xor_into(c, slot->vector);
      combination ^= slot->combination;
    }
    return combination;
  }

 private:
  struct Entry {
    Gf2Column vector;
    ElementSet combination;
  };
  std::vector<std::optional<Entry>> pivots_;
};

}  // namespace

Gf2Matroid::Gf2Matroid(const std::vector<std::vector<std::uint8_t>>& rows)
    : Gf2Matroid(rows, numbered_labels(rows.empty() ? 0 : rows.front().size())) {}

namespace {

std::vector<Gf2Column> pack_columns(const std::vector<std::vector<std::uint8_t>>& rows,
                                    std::size_t cols) {
  const std::size_t words = std::max<std::size_t>(1, (rows.size() + 63) / 64);
  std::vector<Gf2Column> columns(cols, Gf2Column(words, 0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DomainError("matrix row " + std::to_string(r + 1) + " has " +
                        std::to_string(rows[r].size()) + " entries, expected " +
                        std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c] > 1) throw DomainError("GF(2) entries must be 0 or 1");
      if (rows[r][c]) columns[c][r / 64] |= std::uint64_t{1} << (r % 64);
    }
  }
  return columns;
}

}  // namespace

Gf2Matroid::Gf2Matroid(const std::vector<std::vector<std::uint8_t>>& rows,
                       std::vector<std::string> labels)
    : Matroid(std::move(labels)),
      row_count_(rows.size()),
      columns_(pack_columns(rows, ground_size())) {}

Gf2Matroid::Gf2Matroid(std::size_t row_count, std::vector<Column> columns,
                       std::vector<std::string> labels)
    : Matroid(std::move(labels)), row_count_(row_count), columns_(std::move(columns)) {}

bool Gf2Matroid::entry(std::size_t row, std::size_t col) const {
  validate(static_cast<ElementId>(col));
  if (row >= row_count_) throw DomainError("row " + std::to_string(row) + " out of range");
  return (columns_[col][row / 64] >> (row % 64)) & 1U;
}

bool Gf2Matroid::independent_impl(const ElementSet& s) const {
  if (s.size() > row_count_) return false;
  Gf2Basis basis(row_count_);
  for (ElementId id : s) {
    if (!basis.insert(columns_[id], {})) return false;
  }
  return true;
}

std::size_t Gf2Matroid::rank_impl(const ElementSet& s) const {
  Gf2Basis basis(row_count_);
  std::size_t rank = 0;
  for (ElementId id : s) {
    if (basis.insert(columns_[id], {})) ++rank;
  }
  return rank;
}

ElementSet Gf2Matroid::support_impl(const ElementSet& independent,
                                    ElementId x) const {
  Gf2Basis basis(row_count_);
  for (ElementId id : independent) basis.insert(columns_[id], ElementSet{id});
  auto combination = basis.express(columns_[x]);
  if (!combination) {
    throw InternalConsistencyError("GF(2) elimination lost a spanned column");
  }
  return *combination;
}

std::shared_ptr<const Matroid> Gf2Matroid::restrict_impl(
    const std::vector<ElementId>& keep, std::vector<std::string> labels) const {
  std::vector<Column> kept;
  kept.reserve(keep.size());
  for (ElementId id : keep) kept.push_back(columns_[id]);
  return std::shared_ptr<const Matroid>(
      new Gf2Matroid(row_count_, std::move(kept), std::move(labels)));
}

// ---------------------------------------------------------------------------
// Rationals

struct RationalMatroid::Matrix {
  std::size_t rows = 0;
  // Column-major: columns[c][r].
  std::vector<std::vector<mp::cpp_rational>> columns;
};

namespace {

// cpp_rational rejects negative denominators, so the sign moves up first.
mp::cpp_rational make_rational(mp::cpp_int p, mp::cpp_int q) {
  if (q == 0) throw DomainError("zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return mp::cpp_rational(p, q);
}

mp::cpp_rational to_rational(const RationalEntry& e) {
  try {
    return make_rational(mp::cpp_int(e.numerator), mp::cpp_int(e.denominator));
  } catch (const std::runtime_error&) {
    throw DomainError("malformed rational entry '" + e.numerator + "/" + e.denominator + "'");
  }
}

}  // namespace

RationalEntry parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string num(text.substr(0, slash));
  const std::string den = slash == std::string_view::npos
                              ? std::string("1")
                              : std::string(text.substr(slash + 1));
  auto is_integer = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!is_integer(num) || !is_integer(den)) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  auto strip_plus = [](const std::string& s) {
    return s[0] == '+' ? s.substr(1) : s;
  };
  const mp::cpp_int p(strip_plus(num));
  const mp::cpp_int q(strip_plus(den));
  if (q == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  const mp::cpp_rational value = make_rational(p, q);
  return RationalEntry{mp::numerator(value).str(), mp::denominator(value).str()};
}

RationalMatroid::RationalMatroid(const std::vector<std::vector<RationalEntry>>& rows)
    : RationalMatroid(rows, numbered_labels(rows.empty() ? 0 : rows.front().size())) {}

RationalMatroid::RationalMatroid(const std::vector<std::vector<RationalEntry>>& rows,
                                 std::vector<std::string> labels)
    : Matroid(std::move(labels)), matrix_(std::make_unique<Matrix>()) {
  matrix_->rows = rows.size();
  matrix_->columns.assign(ground_size(),
                          std::vector<mp::cpp_rational>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ground_size()) {
      throw DomainError("matrix row " + std::to_string(r + 1) + " has " +
                        std::to_string(rows[r].size()) + " entries, expected " +
                        std::to_string(ground_size()));
    }
    for (std::size_t c = 0; c < ground_size(); ++c) {
      matrix_->columns[c][r] = to_rational(rows[r][c]);
    }
  }
}

RationalMatroid::RationalMatroid(std::unique_ptr<Matrix> matrix,
                                 std::vector<std::string> labels)
    : Matroid(std::move(labels)), matrix_(std::move(matrix)) {}

RationalMatroid::~RationalMatroid() = default;

std::size_t RationalMatroid::row_count() const { return matrix_->rows; }

RationalEntry RationalMatroid::entry(std::size_t row, std::size_t col) const {
  validate(static_cast<ElementId>(col));
  if (row >= matrix_->rows) throw DomainError("row " + std::to_string(row) + " out of range");
  const auto& v = matrix_->columns[col][row];
  return RationalEntry{mp::numerator(v).str(), mp::denominator(v).str()};
}

std::size_t RationalMatroid::rank_impl(const ElementSet& s) const {
  // Gaussian elimination on the selected columns, stored as rows of the
  // transpose so each pivot step scans contiguous vectors.
  std::vector<std::vector<mp::cpp_rational>> vectors;
  for (ElementId id : s) vectors.push_back(matrix_->columns[id]);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < matrix_->rows && rank < vectors.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < vectors.size() && vectors[pivot][col] == 0) ++pivot;
    if (pivot == vectors.size()) continue;
    std::swap(vectors[rank], vectors[pivot]);
    for (std::size_t i = rank + 1; i < vectors.size(); ++i) {
      if (vectors[i][col] == 0) continue;
      const mp::cpp_rational factor = vectors[i][col] / vectors[rank][col];
      for (std::size_t j = col; j < matrix_->rows; ++j) {
        vectors[i][j] -= factor * vectors[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

bool RationalMatroid::independent_impl(const ElementSet& s) const {
  return s.size() <= matrix_->rows && rank_impl(s) == s.size();
}

std::shared_ptr<const Matroid> RationalMatroid::restrict_impl(
    const std::vector<ElementId>& keep, std::vector<std::string> labels) const {
  auto kept = std::make_unique<Matrix>();
  kept->rows = matrix_->rows;
  for (ElementId id : keep) kept->columns.push_back(matrix_->columns[id]);
  return std::shared_ptr<const Matroid>(
      new RationalMatroid(std::move(kept), std::move(labels)));
}

}  // namespace matex
