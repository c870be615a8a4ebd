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

#include "matex/serialize.hpp"

#include <json.hpp>

#include "matex/errors.hpp"

namespace matex {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json labels_json(const Matroid& m, const std::vector<ElementId>& ids) {
  ordered_json out = ordered_json::array();
  for (ElementId id : ids) out.push_back(m.label(id));
  return out;
}

std::vector<ElementId> ids_from_labels(const Matroid& m, const ordered_json& arr) {
  if (!arr.is_array()) throw DomainError("expected an array of labels");
  std::vector<ElementId> out;
  for (const auto& v : arr) {
    if (!v.is_string()) throw DomainError("labels must be strings");
    auto id = m.find_label(v.get<std::string>());
    if (!id) throw DomainError("unknown element label '" + v.get<std::string>() + "'");
    out.push_back(*id);
  }
  return out;
}

std::vector<std::string> strings(const ordered_json& arr) {
  std::vector<std::string> out;
  for (const auto& v : arr) out.push_back(v.get<std::string>());
  return out;
}

}  // namespace

std::string sequence_to_json(const Matroid& m, const ExchangeSequence& seq) {
  ordered_json j;
  j["a_order"] = labels_json(m, seq.a_order);
  j["b_order"] = labels_json(m, seq.b_order);
  ordered_json cert = ordered_json::array();
  for (const auto& s : seq.certificate) cert.push_back(labels_json(m, s.to_vector()));
  j["certificate"] = std::move(cert);
  return j.dump();
}

ExchangeSequence sequence_from_json(const BasePair& p, std::string_view json) {
  ordered_json j;
  try {
    j = ordered_json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed sequence JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("a_order") || !j.contains("b_order")) {
    throw DomainError("sequence JSON needs a_order and b_order");
  }
  const Matroid& m = p.matroid();
  ExchangeSequence seq;
  seq.a_order = ids_from_labels(m, j["a_order"]);
  seq.b_order = ids_from_labels(m, j["b_order"]);
  if (j.contains("certificate")) {
    for (const auto& entry : j["certificate"]) {
      const auto ids = ids_from_labels(m, entry);
      seq.certificate.emplace_back(std::span<const ElementId>(ids));
    }
  }
  return seq;
}

std::string cyclic_order_to_json(const Matroid& m, const CyclicOrder& order) {
  ordered_json j;
  j["sequence"] = labels_json(m, order.sequence);
  return j.dump();
}

std::string finding_to_json(const Finding& f) {
  ordered_json j;
  j["instance"] = f.instance;
  j["check"] = f.check;
  j["status"] = std::string(to_string(f.status));
  j["detail"] = f.detail;
  ordered_json w;
  w["matroid"] = f.witness.matroid_text;
  w["a"] = f.witness.a_labels;
  w["b"] = f.witness.b_labels;
  w["inputs"] = f.witness.inputs;
  w["seed"] = f.witness.seed;
  w["max_steps"] = f.witness.max_steps;
  j["witness"] = std::move(w);
  return j.dump();
}

Finding finding_from_json(std::string_view line) {
  try {
    const auto j = ordered_json::parse(line);
    Finding f;
    f.instance = j.at("instance").get<std::string>();
    f.check = j.at("check").get<std::string>();
    f.status = parse_status(j.at("status").get<std::string>());
    f.detail = j.value("detail", std::string());
    const auto& w = j.at("witness");
    f.witness.matroid_text = w.value("matroid", std::string());
    if (w.contains("a")) f.witness.a_labels = strings(w["a"]);
    if (w.contains("b")) f.witness.b_labels = strings(w["b"]);
    if (w.contains("inputs")) f.witness.inputs = strings(w["inputs"]);
    f.witness.seed = w.value("seed", std::uint64_t{0});
    f.witness.max_steps = w.value("max_steps", std::uint64_t{0});
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed finding JSON: ") + e.what());
  }
}

std::string findings_to_jsonl(const std::vector<Finding>& findings) {
  std::string out;
  for (const auto& f : findings) {
    out += finding_to_json(f);
    out += '\n';
  }
  return out;
}

}  // namespace matex
