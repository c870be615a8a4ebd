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

#include "matex/matroid_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "matex/errors.hpp"

namespace matex {

namespace {

struct Line {
  std::size_t number = 0;
  std::string text;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    raw = trim(raw);
    if (!raw.empty()) lines.push_back(Line{number, std::string(raw)});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return lines;
}

// "key: value" -> (key, value); nullopt when the line has no colon.
std::optional<std::pair<std::string, std::string>> split_key(const Line& line) {
  const auto colon = line.text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  return std::pair{std::string(trim(std::string_view(line.text).substr(0, colon))),
                   std::string(trim(std::string_view(line.text).substr(colon + 1)))};
}

std::size_t parse_count(const Line& line, std::string_view token, std::string_view what) {
  std::size_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || token.empty()) {
    throw ParseError(line.number, "expected a non-negative integer for " +
                                      std::string(what) + ", got '" +
                                      std::string(token) + "'");
  }
  return value;
}

std::shared_ptr<const Matroid> parse_uniform(const std::vector<Line>& lines) {
  std::optional<std::size_t> k, n;
  std::optional<std::vector<std::string>> labels;
  std::size_t labels_line = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto kv = split_key(lines[i]);
    if (!kv) throw ParseError(lines[i].number, "expected 'key: value'");
    auto& [key, value] = *kv;
    if (key == "k") {
      if (k) throw ParseError(lines[i].number, "duplicate 'k'");
      k = parse_count(lines[i], value, "k");
    } else if (key == "n") {
      if (n) throw ParseError(lines[i].number, "duplicate 'n'");
      n = parse_count(lines[i], value, "n");
    } else if (key == "labels") {
      labels = split_words(value);
      labels_line = lines[i].number;
    } else {
      throw ParseError(lines[i].number, "unknown key '" + key + "' for uniform matroid");
    }
  }
  const std::size_t last = lines.back().number;
  if (!k) throw ParseError(last, "uniform matroid is missing 'k'");
  if (!n) throw ParseError(last, "uniform matroid is missing 'n'");
  if (*k > *n) throw ParseError(last, "uniform matroid needs k <= n");
  if (labels && labels->size() != *n) {
    throw ParseError(labels_line, "expected " + std::to_string(*n) + " labels, got " +
                                      std::to_string(labels->size()));
  }
  try {
    return std::make_shared<UniformMatroid>(*k, labels ? *labels : numbered_labels(*n));
  } catch (const DomainError& e) {
    throw ParseError(labels ? labels_line : last, e.what());
  }
}

std::shared_ptr<const Matroid> parse_graphic(const std::vector<Line>& lines) {
  std::optional<std::size_t> vertices;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  std::vector<std::size_t> edge_lines;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto kv = split_key(lines[i]);
    if (!kv) throw ParseError(lines[i].number, "expected 'key: value'");
    auto& [key, value] = *kv;
    if (key == "vertices") {
      if (vertices) throw ParseError(lines[i].number, "duplicate 'vertices'");
      if (!edges.empty()) throw ParseError(lines[i].number, "'vertices' must precede edges");
      vertices = parse_count(lines[i], value, "vertices");
    } else if (key == "edge") {
      if (!vertices) throw ParseError(lines[i].number, "'edge' before 'vertices'");
      auto words = split_words(value);
      if (words.size() != 3) {
        throw ParseError(lines[i].number, "expected 'edge: <label> <u> <v>'");
      }
      const std::size_t u = parse_count(lines[i], words[1], "edge endpoint");
      const std::size_t v = parse_count(lines[i], words[2], "edge endpoint");
      if (u >= *vertices || v >= *vertices) {
        throw ParseError(lines[i].number, "edge endpoint outside [0, " +
                                              std::to_string(*vertices) + ")");
      }
      edges.push_back(Edge{static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)});
      labels.push_back(words[0]);
      edge_lines.push_back(lines[i].number);
    } else {
      throw ParseError(lines[i].number, "unknown key '" + key + "' for graphic matroid");
    }
  }
  if (!vertices) throw ParseError(lines.back().number, "graphic matroid is missing 'vertices'");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) {
        throw ParseError(edge_lines[i], "duplicate edge label '" + labels[i] + "'");
      }
    }
  }
  return std::make_shared<GraphicMatroid>(*vertices, std::move(edges), std::move(labels));
}

std::vector<std::string> parse_columns_header(const std::vector<Line>& lines) {
  if (lines.size() < 2) {
    throw ParseError(lines.front().number, "linear matroid is missing 'cols:'");
  }
  auto kv = split_key(lines[1]);
  if (!kv || kv->first != "cols") {
    throw ParseError(lines[1].number, "expected 'cols: <labels>'");
  }
  auto labels = split_words(kv->second);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) {
        throw ParseError(lines[1].number, "duplicate column label '" + labels[i] + "'");
      }
    }
  }
  return labels;
}

std::shared_ptr<const Matroid> parse_gf2(const std::vector<Line>& lines) {
  auto labels = parse_columns_header(lines);
  std::vector<std::vector<std::uint8_t>> rows;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& text = lines[i].text;
    std::vector<std::uint8_t> row;
    for (char c : text) {
      if (c == ' ' || c == '\t') continue;
      if (c != '0' && c != '1') {
        throw ParseError(lines[i].number, std::string("GF(2) entry must be 0 or 1, got '") +
                                              c + "'");
      }
      row.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (row.size() != labels.size()) {
      throw ParseError(lines[i].number, "row has " + std::to_string(row.size()) +
                                            " entries, expected " +
                                            std::to_string(labels.size()));
    }
    rows.push_back(std::move(row));
  }
  return std::make_shared<Gf2Matroid>(rows, std::move(labels));
}

std::shared_ptr<const Matroid> parse_rational_matrix(const std::vector<Line>& lines) {
  auto labels = parse_columns_header(lines);
  std::vector<std::vector<RationalEntry>> rows;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    auto words = split_words(lines[i].text);
    if (words.size() != labels.size()) {
      throw ParseError(lines[i].number, "row has " + std::to_string(words.size()) +
                                            " entries, expected " +
                                            std::to_string(labels.size()));
    }
    std::vector<RationalEntry> row;
    for (const auto& w : words) {
      try {
        row.push_back(parse_rational(w));
      } catch (const DomainError& e) {
        throw ParseError(lines[i].number, e.what());
      }
    }
    rows.push_back(std::move(row));
  }
  return std::make_shared<RationalMatroid>(rows, std::move(labels));
}

}  // namespace

std::shared_ptr<const Matroid> parse_matroid(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty matroid description");
  auto kv = split_key(lines.front());
  if (!kv || kv->first != "kind") {
    throw ParseError(lines.front().number, "first line must be 'kind: <kind>'");
  }
  const std::string& kind = kv->second;
  try {
    if (kind == "uniform") return parse_uniform(lines);
    if (kind == "graphic") return parse_graphic(lines);
    if (kind == "linear-gf2") return parse_gf2(lines);
    if (kind == "linear-rational") return parse_rational_matrix(lines);
  } catch (const DomainError& e) {
    throw ParseError(lines.back().number, e.what());
  }
  throw ParseError(lines.front().number, "unknown matroid kind '" + kind + "'");
}

std::shared_ptr<const Matroid> load_matroid(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_matroid(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

std::string serialize_matroid(const Matroid& m) {
  std::ostringstream out;
  out << "kind: " << to_string(m.kind()) << '\n';
  auto join_labels = [&] {
    std::string s;
    for (const auto& l : m.labels()) s += (s.empty() ? "" : " ") + l;
    return s;
  };
  switch (m.kind()) {
    case MatroidKind::kUniform: {
      const auto& u = dynamic_cast<const UniformMatroid&>(m);
      out << "k: " << u.k() << '\n' << "n: " << u.ground_size() << '\n';
      if (u.labels() != numbered_labels(u.ground_size())) {
        out << "labels: " << join_labels() << '\n';
      }
      break;
    }
    case MatroidKind::kGraphic: {
      const auto& g = dynamic_cast<const GraphicMatroid&>(m);
      out << "vertices: " << g.vertex_count() << '\n';
      for (std::size_t i = 0; i < g.edges().size(); ++i) {
        out << "edge: " << g.labels()[i] << ' ' << g.edges()[i].u << ' '
            << g.edges()[i].v << '\n';
      }
      break;
    }
    case MatroidKind::kLinearGf2: {
      const auto& l = dynamic_cast<const Gf2Matroid&>(m);
      out << "cols: " << join_labels() << '\n';
      for (std::size_t r = 0; r < l.row_count(); ++r) {
        for (std::size_t c = 0; c < l.ground_size(); ++c) {
          out << (l.entry(r, c) ? '1' : '0');
        }
        out << '\n';
      }
      break;
    }
    case MatroidKind::kLinearRational: {
      const auto& l = dynamic_cast<const RationalMatroid&>(m);
      out << "cols: " << join_labels() << '\n';
      for (std::size_t r = 0; r < l.row_count(); ++r) {
        for (std::size_t c = 0; c < l.ground_size(); ++c) {
          const auto e = l.entry(r, c);
          if (c) out << ' ';
          out << e.numerator;
          if (e.denominator != "1") out << '/' << e.denominator;
        }
        out << '\n';
      }
      break;
    }
  }
  return out.str();
}

}  // namespace matex
