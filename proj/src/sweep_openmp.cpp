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

#include <omp.h>

#include <exception>

#include "imlab/sweep.hpp"

namespace imlab {

SweepResult run_sweep_parallel(const SweepConfig& config, int threads) {
  SweepResult result{.config = config.canonicalized(), .rows = {}};
  result.config.validate();
  const SweepConfig& grid = result.config;
  const auto total = static_cast<std::int64_t>(grid.grid_size());
  result.rows.resize(static_cast<std::size_t>(total));

  const int team = threads > 0 ? threads : omp_get_max_threads();
  std::exception_ptr failure;
  // Each grid point owns its output slot, so the canonical order falls out of
  // the flat index and no merge step is needed.
  #pragma omp parallel for schedule(dynamic) num_threads(team) default(none) shared(grid, result, failure, total)
  for (std::int64_t flat = 0; flat < total; ++flat) {
    try {
      const auto slot = static_cast<std::size_t>(flat);
      result.rows[slot] = evaluate_grid_point(grid, grid_index(grid, slot));
    } catch (...) {
      #pragma omp critical(imlab_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

}  // namespace imlab
