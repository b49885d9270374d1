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

#include "imlab/random.hpp"
#include "imlab/sweep.hpp"

namespace imlab {

SweepRow evaluate_grid_point(const SweepConfig& config, const GridIndex& index) {
  const NoiseMode mode = config.modes[index.mode];
  const double fraction = config.minority_fractions[index.fraction];
  const double error = config.error_fractions[index.error];

  const LabelVector truth = generate_labels(config.n, fraction, derive_seed(config.seed, {0, index.fraction}));
  const NoiseSpec noise{
      .error_fraction = error,
      .mode = mode,
      .seed = derive_seed(config.seed, {1, static_cast<std::uint64_t>(mode), index.fraction, index.error}),
  };
  const FlipPlan plan = plan_flips(truth, noise);
  const LabelVector corrupted = apply_flips(hypothetical_model(truth), plan, noise.seed);

  return {
      .mode = mode,
      .minority_fraction = fraction,
      .error_fraction = error,
      .plan = plan,
      .report = compute_all(tally(truth, corrupted), config.beta),
  };
}

}  // namespace imlab
