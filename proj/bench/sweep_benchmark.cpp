/*
 * Copyright 2026 The imlab Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "imlab/sweep.hpp"

namespace {

imlab::SweepConfig bench_config(std::size_t n) {
  imlab::SweepConfig config = imlab::SweepConfig::paper_defaults();
  config.n = n;
  config.error_fractions = imlab::linear_grid(0.0, 1.0, 0.01);
  return config;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto config = bench_config(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(imlab::run_sweep_serial(config));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.grid_size()));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto config = bench_config(static_cast<std::size_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(imlab::run_sweep_parallel(config, threads));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.grid_size()));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)
    ->ArgsProduct({{10'000, 100'000}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
