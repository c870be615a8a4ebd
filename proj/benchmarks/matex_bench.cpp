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

#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "matex/base_cobase.hpp"
#include "matex/exchange.hpp"
#include "matex/harness.hpp"

namespace {

using namespace matex;

std::vector<CorpusInstance> gf2_pairs(std::size_t rank) {
  CorpusSpec spec;
  spec.family = Family::kLinearGf2;
  spec.gf2_ranks = {rank};
  spec.gf2_count = 8;
  spec.max_rank = rank;
  spec.seed = 42;
  return enumerate_block_pairs(spec);
}

void BM_Gf2Independence(benchmark::State& state) {
  const auto corpus = gf2_pairs(static_cast<std::size_t>(state.range(0)));
  const Matroid& m = *corpus.front().matroid;
  std::vector<ElementSet> subsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.ground_size()); mask += 7) {
    ElementSet s;
    for (std::size_t i = 0; i < m.ground_size(); ++i) {
      if (mask >> i & 1) s.insert(static_cast<ElementId>(i));
    }
    subsets.push_back(std::move(s));
  }
  for (auto _ : state) {
    std::size_t count = 0;
    for (const auto& s : subsets) count += m.is_independent(s);
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(subsets.size()));
}
BENCHMARK(BM_Gf2Independence)->DenseRange(3, 6);

void BM_PairSerialExchange(benchmark::State& state) {
  const auto corpus = gf2_pairs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& inst : corpus) {
      const auto a = inst.pair->a().to_vector();
      benchmark::DoNotOptimize(pair_serial_exchange(*inst.pair, a[0], a[1]));
    }
  }
}
BENCHMARK(BM_PairSerialExchange)->DenseRange(3, 6);

void BM_FullExchangeRank4(benchmark::State& state) {
  const auto corpus = gf2_pairs(4);
  for (auto _ : state) {
    for (const auto& inst : corpus) {
      benchmark::DoNotOptimize(full_serial_exchange_rank4(*inst.pair));
    }
  }
}
BENCHMARK(BM_FullExchangeRank4);

void BM_BuildGraph(benchmark::State& state) {
  const auto corpus = gf2_pairs(static_cast<std::size_t>(state.range(0)));
  const auto m = corpus.front().matroid;
  for (auto _ : state) {
    const auto g = build_graph(m);
    benchmark::DoNotOptimize(diameter(g));
  }
}
BENCHMARK(BM_BuildGraph)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_FindCyclicOrder(benchmark::State& state) {
  const auto corpus = gf2_pairs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (const auto& inst : corpus) benchmark::DoNotOptimize(find_cyclic_order(*inst.pair));
  }
}
BENCHMARK(BM_FindCyclicOrder)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
