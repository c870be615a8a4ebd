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

#ifndef MATEX_RANDOM_HPP_
#define MATEX_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace matex {

// Seeded generator whose output is fixed across platforms and standard
// libraries: the raw mt19937_64 stream (pinned by the C++ standard) with
// hand-written bounded sampling, since std distributions are not portable.
class PortableRng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64";

  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 finaliser; derives independent per-instance seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace matex

#endif  // MATEX_RANDOM_HPP_
