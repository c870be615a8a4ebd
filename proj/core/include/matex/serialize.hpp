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

#ifndef MATEX_SERIALIZE_HPP_
#define MATEX_SERIALIZE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "matex/base_cobase.hpp"
#include "matex/exchange.hpp"
#include "matex/harness.hpp"

namespace matex {

// {"a_order": [...], "b_order": [...], "certificate": [[...], ...]} with
// external labels. Compact single-line JSON.
std::string sequence_to_json(const Matroid& m, const ExchangeSequence& seq);
// Throws DomainError on unknown labels or malformed JSON.
ExchangeSequence sequence_from_json(const BasePair& p, std::string_view json);

std::string cyclic_order_to_json(const Matroid& m, const CyclicOrder& order);

// One finding per line; keys are emitted in a fixed order so equal findings
// serialise to equal bytes.
std::string finding_to_json(const Finding& f);
Finding finding_from_json(std::string_view line);
std::string findings_to_jsonl(const std::vector<Finding>& findings);

}  // namespace matex

#endif  // MATEX_SERIALIZE_HPP_
