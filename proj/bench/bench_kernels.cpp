// Copyright 2026 The boundent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP kernels for the product-vector search and
// batch certification.

#include <benchmark/benchmark.h>

#include <vector>

#include "boundent/criteria.hpp"
#include "boundent/sampling.hpp"

namespace {

using namespace boundent;

linalg::MatrixC reference_range() {
  const auto p = chessboard::family_a(1, 2, 3, 1, 1, 1);
  return linalg::projector_from_vectors(chessboard::build_vectors(p));
}

criteria::RangeSearchConfig restarts(benchmark::State& state) {
  criteria::RangeSearchConfig cfg;
  cfg.restarts = static_cast<int>(state.range(0));
  cfg.seed = 7;
  return cfg;
}

void BM_SearchSerial(benchmark::State& state) {
  const auto range = reference_range();
  const auto cfg = restarts(state);
  for (auto _ : state) benchmark::DoNotOptimize(criteria::product_in_range_search_serial(range, cfg));
  state.SetItemsProcessed(state.iterations() * cfg.restarts);
}

void BM_SearchParallel(benchmark::State& state) {
  const auto range = reference_range();
  const auto cfg = restarts(state);
  for (auto _ : state) benchmark::DoNotOptimize(criteria::product_in_range_search(range, cfg));
  state.SetItemsProcessed(state.iterations() * cfg.restarts);
}

std::vector<chessboard::RawParams> batch(std::size_t n) {
  std::vector<chessboard::RawParams> out;
  for (std::size_t k = 0; k < n; ++k)
    out.push_back(chessboard::sample_params(chessboard::Family::B, chessboard::item_seed(3, k)));
  return out;
}

void BM_CertifyBatchSerial(benchmark::State& state) {
  const auto params = batch(static_cast<std::size_t>(state.range(0)));
  criteria::RangeSearchConfig cfg;
  cfg.restarts = 20;
  for (auto _ : state) benchmark::DoNotOptimize(criteria::certify_batch_serial(params, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CertifyBatchParallel(benchmark::State& state) {
  const auto params = batch(static_cast<std::size_t>(state.range(0)));
  criteria::RangeSearchConfig cfg;
  cfg.restarts = 20;
  for (auto _ : state) benchmark::DoNotOptimize(criteria::certify_batch(params, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SearchSerial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CertifyBatchSerial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyBatchParallel)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
