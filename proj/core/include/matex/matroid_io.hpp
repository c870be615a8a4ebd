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

#ifndef MATEX_MATROID_IO_HPP_
#define MATEX_MATROID_IO_HPP_

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>

#include "matex/matroid.hpp"

namespace matex {

// Line-oriented matroid description. '#' starts a comment; blank lines are
// ignored. The first line declares the kind:
//
//   kind: uniform            kind: graphic
//   k: 2                     vertices: 4
//   n: 4                     edge: e1 0 1
//   labels: a b c d          edge: e2 1 2      (vertices are 0-based)
//   (labels optional)
//
//   kind: linear-gf2         kind: linear-rational
//   cols: 1 2 3 4            cols: x y z
//   1010                     1 0 1/2
//   0101                     0 1 -3/4
//
// GF(2) rows may be written as a bit string or as space-separated bits.
// Element order is edge order (graphic) or column order (linear).
// Malformed input throws ParseError carrying the 1-based line number.
std::shared_ptr<const Matroid> parse_matroid(std::string_view text);

// Reads and parses a file; ParseError messages are prefixed with the path.
std::shared_ptr<const Matroid> load_matroid(const std::filesystem::path& path);

// Canonical text form; parse_matroid(serialize_matroid(m)) has the same
// labels and independent sets as m.
std::string serialize_matroid(const Matroid& m);

}  // namespace matex

#endif  // MATEX_MATROID_IO_HPP_
