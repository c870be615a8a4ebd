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

#ifndef MATEX_HARNESS_HPP_
#define MATEX_HARNESS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matex/exchange.hpp"
#include "matex/matroid.hpp"

namespace matex {

// ---------------------------------------------------------------------------
// Corpus generation

enum class Family {
  kUniform,    // U(k, 2k) for k = 1..max_rank
  kGraphic,    // curated graphs plus seeded random multigraphs
  kLinearGf2,  // [I_r | M] with M a random invertible bit matrix
  kFixtures,   // matroid files
  kStandard,   // uniform + curated graphic + 50 GF(2) pairs per rank 3..5
};

std::string_view to_string(Family f);
Family parse_family(std::string_view name);

struct CorpusSpec {
  Family family = Family::kStandard;
  std::size_t max_rank = 5;
  // Curated graph names; empty selects all of them.
  std::vector<std::string> graphs;
  std::size_t random_graphs = 0;
  std::size_t max_vertices = 6;
  std::vector<std::size_t> gf2_ranks{3, 4, 5};
  std::size_t gf2_count = 50;
  std::vector<std::filesystem::path> fixtures;
  // Edge-disjoint spanning tree pairs taken from each graph.
  std::size_t pairs_per_graph = 3;
  std::uint64_t seed = 42;
  // Lifts the rank <= 6 guard.
  bool allow_large = false;

  // Throws ConfigError.
  void validate() const;
};

inline constexpr std::size_t kDeskMaxRank = 6;

struct CorpusInstance {
  std::string name;
  std::shared_ptr<const Matroid> matroid;
  std::string matroid_text;
  std::optional<BasePair> pair;
  // Why `pair` is empty, when it is.
  std::string problem;
  std::uint64_t seed = 0;
};

// Deterministic for a fixed CorpusSpec. Instances whose rank exceeds max_rank are
// dropped. Fixture files that fail to parse throw ParseError.
std::vector<CorpusInstance> enumerate_block_pairs(const CorpusSpec& spec);

// Names accepted in CorpusSpec::graphs.
const std::vector<std::string>& curated_graph_names();
std::shared_ptr<const GraphicMatroid> curated_graph(std::string_view name);

// Pairs of disjoint bases (A, B): A runs over bases in lexicographic order,
// B is the lexicographically first base avoiding A. At most `limit` pairs.
std::vector<std::pair<ElementSet, ElementSet>> disjoint_base_pairs(const Matroid& m,
                                                                   std::size_t limit);

// Builds an instance around a matroid and pair (used by replay and tools).
CorpusInstance make_instance(std::string name, std::shared_ptr<const Matroid> m,
                             std::optional<BasePair> pair, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Findings

enum class FindingStatus { kPass, kViolation, kError };

std::string_view to_string(FindingStatus s);
FindingStatus parse_status(std::string_view s);

// Everything needed to re-run one check on one instance.
struct Witness {
  std::string matroid_text;
  std::vector<std::string> a_labels;
  std::vector<std::string> b_labels;
  // Check-specific element labels pinpointing a violation.
  std::vector<std::string> inputs;
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 0;
};

struct Finding {
  std::string instance;
  std::string check;
  FindingStatus status = FindingStatus::kPass;
  std::string detail;
  Witness witness;
};

struct CheckOptions {
  SearchBudget budget{2'000'000};
  // Tuple checks run exhaustively up to this ground size, or when the tuple
  // count is at most sample_cap; otherwise sample_cap tuples are sampled.
  std::size_t exhaustive_ground_limit = 8;
  std::size_t sample_cap = 10'000;
  // Largest A-subset tried by the exhaustive serial-exchange check.
  std::size_t max_subset = 4;
};

// Registered check names, in execution order.
const std::vector<std::string>& check_names();
// Expands "all" and rejects unknown names with ConfigError.
std::vector<std::string> resolve_checks(const std::vector<std::string>& names);

// Runs one check on one instance. Never throws for check outcomes: failures
// of theory-guaranteed results become violations, operational problems
// become errors.
Finding run_check(std::string_view check, const CorpusInstance& instance,
                  const CheckOptions& options);

struct SuiteOptions {
  std::vector<std::string> checks{"all"};
  CheckOptions check;
  std::size_t threads = 1;
};

// Every check over every instance, instance-major, in generation order.
std::vector<Finding> run_property_suite(const CorpusSpec& spec, const SuiteOptions& options);
std::vector<Finding> run_property_suite(const std::vector<CorpusInstance>& corpus,
                                        const SuiteOptions& options);

using MatroidLoader =
    std::function<std::shared_ptr<const Matroid>(const std::string& text)>;

// Rebuilds the instance from the witness and re-runs the finding's check.
// Throws ReplayError for an incomplete or stale witness and when the status
// differs from the original.
Finding replay(const Finding& finding, const MatroidLoader& loader = {});

struct StatusCounts {
  std::size_t pass = 0;
  std::size_t violation = 0;
  std::size_t error = 0;
  std::size_t total() const { return pass + violation + error; }
};

std::map<std::string, StatusCounts> summarize(const std::vector<Finding>& findings);

// ---------------------------------------------------------------------------
// Configuration

struct SuiteConfig {
  CorpusSpec corpus;
  SuiteOptions options;
};

// "key = value" lines, '#' comments, optional quotes, comma-separated
// lists. Unknown keys throw ConfigError.
void apply_config_text(std::string_view text, SuiteConfig& config);
void apply_config_file(const std::filesystem::path& path, SuiteConfig& config);

}  // namespace matex

#endif  // MATEX_HARNESS_HPP_
