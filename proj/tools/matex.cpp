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

// matex: command-line front end for the exchange engine, the property suite
// and the base-cobase graph tools.
//
// Exit codes: 0 success, 1 usage, input or operational error, 2 a violation
// finding or a searched-for object that does not exist.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "matex/base_cobase.hpp"
#include "matex/errors.hpp"
#include "matex/exchange.hpp"
#include "matex/harness.hpp"
#include "matex/matroid_io.hpp"
#include "matex/random.hpp"
#include "matex/serialize.hpp"

#ifndef MATEX_VERSION
#define MATEX_VERSION "unknown"
#endif

namespace {

using namespace matex;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;
constexpr int kReportVersion = 1;

// Raised for bad flag combinations that CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> max_steps;
  std::string fallback = "none";
};

ordered_json report_header(std::string_view command) {
  ordered_json j;
  j["schema"] = "matex-report";
  j["version"] = kReportVersion;
  j["tool"] = {{"name", "matex"}, {"version", MATEX_VERSION}};
  j["command"] = command;
  return j;
}

ordered_json labels_json(const Matroid& m, const std::vector<ElementId>& ids) {
  ordered_json out = ordered_json::array();
  for (ElementId id : ids) out.push_back(m.label(id));
  return out;
}

std::string joined(const Matroid& m, const std::vector<ElementId>& ids) {
  std::string out;
  for (ElementId id : ids) out += (out.empty() ? "" : " ") + m.label(id);
  return out;
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(' ');
    if (first == std::string::npos) continue;
    out.push_back(item.substr(first, item.find_last_not_of(' ') - first + 1));
  }
  return out;
}

ElementSet labels_option(const Matroid& m, const std::string& flag, const std::string& text) {
  try {
    return m.parse_labels(split_labels(text));
  } catch (const DomainError& e) {
    throw DomainError(flag + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::shared_ptr<const Matroid> load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_matroid(text);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

// The pair given by --A/--B, or the first disjoint pair when both are empty.
BasePair pair_from_options(std::shared_ptr<const Matroid> m, const std::string& a,
                           const std::string& b) {
  if (a.empty() != b.empty()) throw UsageError("--A and --B must be given together");
  if (a.empty()) {
    const auto pairs = disjoint_base_pairs(*m, 1);
    if (pairs.empty()) throw NotBlockError("matroid has no two disjoint bases");
    return BasePair(std::move(m), pairs.front().first, pairs.front().second);
  }
  const ElementSet a_set = labels_option(*m, "--A", a);
  const ElementSet b_set = labels_option(*m, "--B", b);
  return BasePair(std::move(m), a_set, b_set);
}

SearchBudget budget_of(const Globals& g, std::uint64_t fallback_steps = 0) {
  return SearchBudget{g.max_steps.value_or(fallback_steps)};
}

// ---------------------------------------------------------------------------
// exchange

struct ExchangeArgs {
  std::string file;
  std::string a, b, subset;
  bool brute = false;
  bool full = false;
  bool verify = false;
};

void print_sequence(const Matroid& m, const ExchangeSequence& seq) {
  std::cout << "a_order: " << joined(m, seq.a_order) << "\n";
  std::cout << "b_order: " << joined(m, seq.b_order) << "\n";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::cout << "step " << i + 1 << ": swap " << m.label(seq.a_order[i]) << " <-> "
              << m.label(seq.b_order[i]) << "  A-side " << m.format(seq.certificate[2 * i])
              << "  B-side " << m.format(seq.certificate[2 * i + 1]) << "\n";
  }
}

// Rebuilds the matroid from the file and checks the serialised certificate
// against the fresh oracle.
bool verify_fresh(const ExchangeArgs& args, const BasePair& original, const std::string& json) {
  auto fresh = load(args.file);
  BasePair p(fresh, original.a(), original.b());
  const ExchangeSequence seq = sequence_from_json(p, json);
  return verify_sequence(p, seq);
}

int cmd_exchange(const Globals& g, const ExchangeArgs& args) {
  if (args.brute && args.full) throw UsageError("--brute and --full are exclusive");
  auto m = load(args.file);
  if (args.a.empty() || args.b.empty()) throw UsageError("exchange needs --A and --B");
  const BasePair p = pair_from_options(m, args.a, args.b);

  std::string mode;
  std::optional<ExchangeSequence> seq;
  bool fallback_used = false;
  std::string anomaly;
  if (args.full) {
    mode = "full";
    const Fallback fb = g.fallback == "brute" ? Fallback::kBrute : Fallback::kNone;
    auto out = full_serial_exchange(p, fb, budget_of(g));
    seq = std::move(out.sequence);
    fallback_used = out.fallback_used;
    anomaly = out.anomaly;
  } else {
    if (args.subset.empty()) throw UsageError("exchange needs --subset (or --full)");
    const ElementSet subset = labels_option(*m, "--subset", args.subset);
    if (!subset.is_subset_of(p.a())) throw DomainError("--subset must lie inside --A");
    if (args.brute) {
      mode = "brute";
      if (subset.size() > 4) {
        throw UsageError("--brute handles subsets of size at most 4, got " +
                         std::to_string(subset.size()));
      }
      seq = brute_force_serial_exchange(p, subset, budget_of(g));
    } else {
      mode = "constructive";
      if (subset.size() != 2) {
        throw UsageError("constructive exchange needs a subset of size 2, got " +
                         std::to_string(subset.size()) + " (use --brute for other sizes)");
      }
      const auto ids = subset.to_vector();
      seq = pair_serial_exchange(p, ids[0], ids[1]);
    }
  }

  std::optional<bool> verified;
  std::string seq_json;
  if (seq) {
    seq_json = sequence_to_json(*m, *seq);
    if (args.verify) verified = verify_fresh(args, p, seq_json);
  }

  if (g.json) {
    ordered_json j = report_header("exchange");
    j["config"] = {{"file", args.file},
                   {"a", labels_json(*m, p.a().to_vector())},
                   {"b", labels_json(*m, p.b().to_vector())},
                   {"mode", mode},
                   {"fallback", g.fallback},
                   {"max_steps", budget_of(g).max_steps}};
    ordered_json result;
    result["found"] = seq.has_value();
    result["sequence"] = seq ? ordered_json::parse(seq_json) : ordered_json(nullptr);
    result["fallback_used"] = fallback_used;
    if (fallback_used) result["anomaly"] = anomaly;
    result["verified"] = verified ? ordered_json(*verified) : ordered_json(nullptr);
    j["result"] = std::move(result);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "A: " << m->format(p.a()) << "\nB: " << m->format(p.b()) << "\n";
    if (seq) {
      print_sequence(*m, *seq);
    } else {
      std::cout << "no serial symmetric exchange exists for this subset\n";
    }
    if (verified) std::cout << "verified: " << (*verified ? "yes" : "NO") << "\n";
  }
  if (fallback_used) std::cerr << "warning: constructive procedure failed, fell back: " << anomaly << "\n";
  if (!seq) return kExitViolation;
  if (verified && !*verified) {
    std::cerr << "error: certificate failed re-verification\n";
    return kExitViolation;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  std::string config;
  std::optional<std::string> family;
  std::optional<std::size_t> max_rank;
  std::optional<std::string> graphs;
  std::optional<std::size_t> random_graphs;
  std::optional<std::size_t> max_vertices;
  std::optional<std::string> ranks;
  std::optional<std::size_t> count;
  std::vector<std::string> fixtures;
  std::optional<std::string> checks;
  std::optional<std::size_t> threads;
  bool allow_large = false;
  std::string jsonl;
  bool timings = false;
};

std::vector<std::size_t> parse_sizes(const std::string& flag, const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& item : split_labels(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoul(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + " expects integers, got '" + item + "'");
    }
  }
  return out;
}

SuiteConfig suite_config(const Globals& g, const CheckArgs& args) {
  SuiteConfig c;
  if (!args.config.empty()) apply_config_file(args.config, c);
  // Flags win over the file.
  if (args.family) c.corpus.family = parse_family(*args.family);
  if (args.max_rank) c.corpus.max_rank = *args.max_rank;
  if (args.graphs) c.corpus.graphs = split_labels(*args.graphs);
  if (args.random_graphs) c.corpus.random_graphs = *args.random_graphs;
  if (args.max_vertices) c.corpus.max_vertices = *args.max_vertices;
  if (args.ranks) c.corpus.gf2_ranks = parse_sizes("--ranks", *args.ranks);
  if (args.count) c.corpus.gf2_count = *args.count;
  if (!args.fixtures.empty()) {
    c.corpus.fixtures.assign(args.fixtures.begin(), args.fixtures.end());
  }
  if (args.allow_large) c.corpus.allow_large = true;
  if (args.checks) c.options.checks = split_labels(*args.checks);
  if (args.threads) c.options.threads = *args.threads;
  if (g.seed) c.corpus.seed = *g.seed;
  if (g.max_steps) c.options.check.budget.max_steps = *g.max_steps;
  return c;
}

ordered_json config_json(const SuiteConfig& c) {
  ordered_json j;
  j["family"] = std::string(to_string(c.corpus.family));
  j["max_rank"] = c.corpus.max_rank;
  j["graphs"] = c.corpus.graphs;
  j["random_graphs"] = c.corpus.random_graphs;
  j["max_vertices"] = c.corpus.max_vertices;
  j["gf2_ranks"] = c.corpus.gf2_ranks;
  j["gf2_count"] = c.corpus.gf2_count;
  ordered_json fixtures = ordered_json::array();
  for (const auto& f : c.corpus.fixtures) fixtures.push_back(f.string());
  j["fixtures"] = std::move(fixtures);
  j["pairs_per_graph"] = c.corpus.pairs_per_graph;
  j["seed"] = c.corpus.seed;
  j["rng"] = std::string(PortableRng::kAlgorithm);
  j["checks"] = resolve_checks(c.options.checks);
  j["max_steps"] = c.options.check.budget.max_steps;
  j["sample_cap"] = c.options.check.sample_cap;
  j["max_subset"] = c.options.check.max_subset;
  return j;
}

int cmd_check(const Globals& g, const CheckArgs& args) {
  const SuiteConfig config = suite_config(g, args);
  const auto checks = resolve_checks(config.options.checks);

  const auto start = std::chrono::steady_clock::now();
  const auto corpus = enumerate_block_pairs(config.corpus);
  const auto generated = std::chrono::steady_clock::now();
  const auto findings = run_property_suite(corpus, config.options);
  const auto finished = std::chrono::steady_clock::now();
  auto secs = [](auto from, auto to) { return std::chrono::duration<double>(to - from).count(); };

  const auto counts = summarize(findings);
  StatusCounts total;
  for (const auto& [_, c] : counts) {
    total.pass += c.pass;
    total.violation += c.violation;
    total.error += c.error;
  }

  if (!args.jsonl.empty()) {
    std::ofstream out(args.jsonl, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + args.jsonl);
    out << findings_to_jsonl(findings);
  }

  if (g.json) {
    ordered_json j = report_header("check");
    j["config"] = config_json(config);
    j["instances"] = corpus.size();
    ordered_json summary;
    for (const auto& name : checks) {
      const auto it = counts.find(name);
      const StatusCounts c = it == counts.end() ? StatusCounts{} : it->second;
      summary[name] = {{"pass", c.pass}, {"violation", c.violation}, {"error", c.error}};
    }
    j["summary"] = std::move(summary);
    j["totals"] = {{"pass", total.pass}, {"violation", total.violation}, {"error", total.error}};
    if (!args.jsonl.empty()) {
      j["findings_path"] = args.jsonl;
    } else {
      ordered_json list = ordered_json::array();
      for (const auto& f : findings) list.push_back(ordered_json::parse(finding_to_json(f)));
      j["findings"] = std::move(list);
    }
    if (args.timings) {
      j["timings"] = {{"generate_seconds", secs(start, generated)},
                      {"checks_seconds", secs(generated, finished)}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "corpus: " << to_string(config.corpus.family) << ", seed " << config.corpus.seed
              << " (" << PortableRng::kAlgorithm << "), " << corpus.size() << " instances\n";
    std::printf("%-28s %8s %10s %6s\n", "check", "pass", "violation", "error");
    for (const auto& name : checks) {
      const auto it = counts.find(name);
      const StatusCounts c = it == counts.end() ? StatusCounts{} : it->second;
      std::printf("%-28s %8zu %10zu %6zu\n", name.c_str(), c.pass, c.violation, c.error);
    }
    std::fflush(stdout);
    std::cout << "pass: " << total.pass << "\nviolation: " << total.violation
              << "\nerror: " << total.error << "\n";
    if (args.timings) {
      std::printf("time: generate %.3f s, checks %.3f s\n", secs(start, generated),
                  secs(generated, finished));
    }
    for (const auto& f : findings) {
      if (f.status == FindingStatus::kPass) continue;
      std::cout << to_string(f.status) << ": " << f.instance << " / " << f.check << ": "
                << f.detail << "\n";
      if (f.status == FindingStatus::kViolation) {
        std::cout << "  witness: " << finding_to_json(f) << "\n";
      }
    }
  }
  if (total.violation > 0) return kExitViolation;
  if (total.error > 0) return kExitError;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// graph

struct GraphArgs {
  std::string file;
  std::string export_path;
};

int cmd_graph(const Globals& g, const GraphArgs& args) {
  auto m = load(args.file);
  const BaseCobaseGraph graph = build_graph(m);
  const auto d = diameter(graph);
  const auto parts = components(graph);
  if (!args.export_path.empty()) {
    std::ofstream out(args.export_path);
    if (!out) throw std::runtime_error("cannot write " + args.export_path);
    write_adjacency(out, graph);
  }
  const std::size_t n = graph.rank();
  const bool diameter_matches = d.has_value() && *d == n;

  if (g.json) {
    ordered_json j = report_header("graph");
    j["config"] = {{"file", args.file}, {"export", args.export_path}};
    ordered_json result;
    result["rank"] = n;
    result["ground_size"] = m->ground_size();
    result["vertices"] = graph.vertex_count();
    result["edges"] = graph.edge_count();
    result["connected"] = d.has_value();
    result["diameter"] = d ? ordered_json(*d) : ordered_json(nullptr);
    ordered_json comps = ordered_json::array();
    for (const auto& c : parts) {
      comps.push_back({{"vertices", c.vertices.size()}, {"diameter", c.diameter}});
    }
    result["components"] = std::move(comps);
    result["diameter_equals_rank"] = diameter_matches;
    j["result"] = std::move(result);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "block matroid: rank " << n << ", " << m->ground_size() << " elements\n"
              << "vertices: " << graph.vertex_count() << "\n"
              << "edges: " << graph.edge_count() << "\n"
              << "connected: " << (d ? "yes" : "no") << "\n";
    if (d) {
      std::cout << "diameter: " << *d << " (rank " << n << ")\n";
    } else {
      std::cout << "diameter: none; component diameters:";
      for (const auto& c : parts) std::cout << " " << c.diameter;
      std::cout << "\n";
    }
    if (!args.export_path.empty()) std::cout << "adjacency written to " << args.export_path << "\n";
  }
  if (!diameter_matches) {
    std::cerr << "violation: base-cobase graph of " << args.file
              << (d ? " has diameter " + std::to_string(*d) + " but rank " + std::to_string(n)
                    : std::string(" is disconnected"))
              << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// cyclic

struct CyclicArgs {
  std::string file;
  std::string a, b;
};

int cmd_cyclic(const Globals& g, const CyclicArgs& args) {
  auto m = load(args.file);
  const BasePair p = pair_from_options(m, args.a, args.b);
  const auto order = find_cyclic_order(p, budget_of(g));
  if (g.json) {
    ordered_json j = report_header("cyclic");
    j["config"] = {{"file", args.file},
                   {"a", labels_json(*m, p.a().to_vector())},
                   {"b", labels_json(*m, p.b().to_vector())},
                   {"max_steps", budget_of(g).max_steps}};
    j["result"] = {{"found", order.has_value()},
                   {"sequence", order ? labels_json(*m, order->sequence) : ordered_json(nullptr)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "A: " << m->format(p.a()) << "\nB: " << m->format(p.b()) << "\n";
    if (order) {
      std::cout << "cyclic order: " << joined(*m, order->sequence) << "\n";
    } else {
      std::cout << "no cyclic base order exists for this pair\n";
    }
  }
  if (!order) {
    std::cerr << "violation: no cyclic base order for " << p.describe() << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial symmetric exchange and base-cobase tools for matroids", "matex"};
  app.set_version_flag("--version", std::string(MATEX_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Print a JSON report");
  app.add_option("--seed", g.seed, "Corpus seed");
  app.add_option("--max-steps", g.max_steps, "Step budget for exhaustive searches (0 = none)");
  app.add_option("--fallback", g.fallback, "Fallback for the full constructive exchange")
      ->check(CLI::IsMember({"none", "brute"}));

  ExchangeArgs ex;
  auto* exchange = app.add_subcommand("exchange", "Serial symmetric exchange on one base pair");
  exchange->add_option("file", ex.file, "Matroid file")->required();
  exchange->add_option("--A", ex.a, "Labels of base A, comma separated");
  exchange->add_option("--B", ex.b, "Labels of base B, comma separated");
  exchange->add_option("--subset", ex.subset, "Labels of the A-subset to exchange");
  exchange->add_flag("--brute", ex.brute, "Exhaustive search (subset size up to 4)");
  exchange->add_flag("--full", ex.full, "Full exchange of all of A (rank up to 4)");
  exchange->add_flag("--verify", ex.verify, "Re-check the certificate with a fresh oracle");

  CheckArgs ck;
  auto* check = app.add_subcommand("check", "Run the property suite over a corpus");
  check->add_option("--config", ck.config, "key = value configuration file");
  check->add_option("--family", ck.family, "uniform, graphic, gf2, fixtures or standard");
  check->add_option("--max-rank,--max-n", ck.max_rank, "Largest rank generated");
  check->add_option("--graphs", ck.graphs, "Curated graph names, comma separated");
  check->add_option("--random-graphs", ck.random_graphs, "Number of seeded random multigraphs");
  check->add_option("--max-vertices", ck.max_vertices, "Vertex cap for graphs");
  check->add_option("--ranks", ck.ranks, "GF(2) ranks, comma separated");
  check->add_option("--count", ck.count, "GF(2) pairs per rank");
  check->add_option("--fixtures", ck.fixtures, "Matroid files for the fixtures family");
  check->add_option("--checks", ck.checks, "Check names, comma separated, or all");
  check->add_option("--threads", ck.threads, "Worker threads");
  check->add_flag("--allow-large", ck.allow_large, "Lift the rank <= 6 guard");
  check->add_option("--jsonl", ck.jsonl, "Write findings as JSON lines to this path");
  check->add_flag("--timings", ck.timings, "Include wall-clock timings in the report");

  GraphArgs gr;
  auto* graph = app.add_subcommand("graph", "Base-cobase graph of a block matroid");
  graph->add_option("file", gr.file, "Matroid file")->required();
  graph->add_option("--export", gr.export_path, "Write the adjacency list to this path");

  CyclicArgs cy;
  auto* cyclic = app.add_subcommand("cyclic", "Search for a cyclic base order");
  cyclic->add_option("file", cy.file, "Matroid file")->required();
  cyclic->add_option("--A", cy.a, "Labels of base A (default: first disjoint pair)");
  cyclic->add_option("--B", cy.b, "Labels of base B");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*exchange) return cmd_exchange(g, ex);
    if (*check) return cmd_check(g, ck);
    if (*graph) return cmd_graph(g, gr);
    if (*cyclic) return cmd_cyclic(g, cy);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const NotBlockError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << " (raise --max-steps)\n";
  } catch (const InternalConsistencyError& e) {
    std::cerr << "violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitError;
}
