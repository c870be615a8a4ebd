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

#include "matex/harness.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "matex/errors.hpp"
#include "matex/matroid_io.hpp"

namespace matex {

std::string_view to_string(FindingStatus s) {
  switch (s) {
    case FindingStatus::kPass:
      return "pass";
    case FindingStatus::kViolation:
      return "violation";
    case FindingStatus::kError:
      return "error";
  }
  return "unknown";
}

FindingStatus parse_status(std::string_view s) {
  if (s == "pass") return FindingStatus::kPass;
  if (s == "violation") return FindingStatus::kViolation;
  if (s == "error") return FindingStatus::kError;
  throw DomainError("unknown finding status '" + std::string(s) + "'");
}

std::vector<Finding> run_property_suite(const CorpusSpec& spec, const SuiteOptions& options) {
  resolve_checks(options.checks);  // reject bad names before generating anything
  return run_property_suite(enumerate_block_pairs(spec), options);
}

std::vector<Finding> run_property_suite(const std::vector<CorpusInstance>& corpus,
                                        const SuiteOptions& options) {
  const auto checks = resolve_checks(options.checks);
  std::vector<std::vector<Finding>> per_instance(corpus.size());
  auto work = [&](std::size_t i) {
    auto& out = per_instance[i];
    out.reserve(checks.size());
    for (const auto& check : checks) out.push_back(run_check(check, corpus[i], options.check));
  };

  const std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, corpus.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < corpus.size(); i = next++) work(i);
      });
    }
  }

  std::vector<Finding> findings;
  for (auto& batch : per_instance) {
    std::move(batch.begin(), batch.end(), std::back_inserter(findings));
  }
  return findings;
}

Finding replay(const Finding& finding, const MatroidLoader& loader) {
  const Witness& w = finding.witness;
  if (w.matroid_text.empty()) throw ReplayError("witness has no matroid description");
  if (finding.check.empty()) throw ReplayError("finding names no check");

  std::shared_ptr<const Matroid> m;
  try {
    m = loader ? loader(w.matroid_text) : parse_matroid(w.matroid_text);
  } catch (const std::exception& e) {
    throw ReplayError(std::string("cannot rebuild witness matroid: ") + e.what());
  }
  if (!m) throw ReplayError("loader returned no matroid");

  std::optional<BasePair> pair;
  const bool has_labels = !w.a_labels.empty() || !w.b_labels.empty();
  if (has_labels || m->rank() == 0) {
    try {
      pair.emplace(m, m->parse_labels(w.a_labels), m->parse_labels(w.b_labels));
    } catch (const std::exception& e) {
      throw ReplayError(std::string("stale witness: ") + e.what());
    }
  } else if (finding.status != FindingStatus::kError) {
    // Only error findings on matroids without a base pair omit the labels.
    throw ReplayError("witness is missing its base labels");
  }

  CorpusInstance instance;
  instance.name = finding.instance;
  instance.matroid = m;
  instance.matroid_text = w.matroid_text;
  instance.pair = std::move(pair);
  if (!instance.pair) instance.problem = "matroid has no two disjoint bases";
  instance.seed = w.seed;

  CheckOptions options;
  options.budget.max_steps = w.max_steps;
  Finding again;
  try {
    again = run_check(finding.check, instance, options);
  } catch (const ConfigError& e) {
    throw ReplayError(e.what());
  }
  if (again.status != finding.status) {
    throw ReplayError("replay of " + finding.check + " on " + finding.instance + " gave " +
                      std::string(to_string(again.status)) + ", originally " +
                      std::string(to_string(finding.status)));
  }
  return again;
}

std::map<std::string, StatusCounts> summarize(const std::vector<Finding>& findings) {
  std::map<std::string, StatusCounts> out;
  for (const auto& f : findings) {
    auto& c = out[f.check];
    switch (f.status) {
      case FindingStatus::kPass:
        ++c.pass;
        break;
      case FindingStatus::kViolation:
        ++c.violation;
        break;
      case FindingStatus::kError:
        ++c.error;
        break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Configuration

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  std::string out(s.substr(first, last - first + 1));
  if (out.size() >= 2 && (out.front() == '"' || out.front() == '\'') && out.back() == out.front()) {
    out = out.substr(1, out.size() - 2);
  }
  return out;
}

std::vector<std::string> split_list(std::string_view value) {
  std::string v(value);
  if (!v.empty() && v.front() == '[' && v.back() == ']') v = v.substr(1, v.size() - 2);
  std::vector<std::string> out;
  std::stringstream in(v);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(value, &used, 0);
    if (used != value.size() || value.front() == '-') throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' expects a non-negative integer, got '" + value + "'");
  }
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw ConfigError("'" + key + "' expects true or false, got '" + value + "'");
}

}  // namespace

void apply_config_text(std::string_view text, SuiteConfig& config) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '[') continue;  // blank or section header
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(number) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    auto& c = config.corpus;
    auto& o = config.options;
    if (key == "family") {
      c.family = parse_family(value);
    } else if (key == "max_rank" || key == "max_n") {
      c.max_rank = to_u64(key, value);
    } else if (key == "graphs") {
      c.graphs = split_list(value);
    } else if (key == "random_graphs") {
      c.random_graphs = to_u64(key, value);
    } else if (key == "max_vertices") {
      c.max_vertices = to_u64(key, value);
    } else if (key == "ranks" || key == "gf2_ranks") {
      c.gf2_ranks.clear();
      for (const auto& r : split_list(value)) c.gf2_ranks.push_back(to_u64(key, r));
    } else if (key == "count" || key == "gf2_count") {
      c.gf2_count = to_u64(key, value);
    } else if (key == "fixtures") {
      c.fixtures.clear();
      for (const auto& f : split_list(value)) c.fixtures.emplace_back(f);
    } else if (key == "pairs_per_graph") {
      c.pairs_per_graph = to_u64(key, value);
    } else if (key == "seed") {
      c.seed = to_u64(key, value);
    } else if (key == "allow_large") {
      c.allow_large = to_bool(key, value);
    } else if (key == "checks") {
      o.checks = split_list(value);
    } else if (key == "max_steps") {
      o.check.budget.max_steps = to_u64(key, value);
    } else if (key == "sample_cap") {
      o.check.sample_cap = to_u64(key, value);
    } else if (key == "max_subset") {
      o.check.max_subset = to_u64(key, value);
    } else if (key == "threads") {
      o.threads = to_u64(key, value);
    } else {
      throw ConfigError("config line " + std::to_string(number) + ": unknown key '" + key + "'");
    }
  }
}

void apply_config_file(const std::filesystem::path& path, SuiteConfig& config) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  apply_config_text(buffer.str(), config);
}

}  // namespace matex
