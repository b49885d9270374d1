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

#include "imlab/sweep.hpp"

namespace imlab {

SweepResult run_sweep_serial(const SweepConfig& config) {
  SweepResult result{.config = config.canonicalized(), .rows = {}};
  result.config.validate();
  const std::size_t total = result.config.grid_size();
  result.rows.reserve(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    result.rows.push_back(evaluate_grid_point(result.config, grid_index(result.config, flat)));
  }
  return result;
}

}  // namespace imlab
