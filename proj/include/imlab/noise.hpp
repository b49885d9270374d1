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

#ifndef IMLAB_NOISE_HPP_
#define IMLAB_NOISE_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "imlab/labels.hpp"
#include "imlab/metrics.hpp"

namespace imlab {

enum class NoiseMode : std::uint8_t {
  kBothClasses,
  kMinorityOnly,
};

// "both" / "minority-only".
std::string_view mode_name(NoiseMode mode);
// Throws std::invalid_argument for anything else.
NoiseMode mode_from_name(std::string_view name);

struct NoiseSpec {
  double error_fraction = 0.0;  // of the total instance count, in [0, 1]
  NoiseMode mode = NoiseMode::kBothClasses;
  std::uint64_t seed = 0;
};

// Resolved per-class label inversions.
struct FlipPlan {
  std::size_t k_total = 0;
  std::size_t k_pos = 0;  // fraud -> normal
  std::size_t k_neg = 0;  // normal -> fraud
  bool clamped = false;

  friend bool operator==(const FlipPlan&, const FlipPlan&) = default;
};

// Fraud labels generated for (n, fraction): max(1, round(n * fraction)).
std::size_t fraud_count_for(std::size_t n, double minority_fraction);

// Exactly fraud_count_for(n, fraction) frauds at seed-determined positions.
// Throws std::invalid_argument for n < 2 or a fraction outside (0, 0.5].
LabelVector generate_labels(std::size_t n, double minority_fraction, std::uint64_t seed);

// Flip counts for `spec` against the class counts of `labels`. Throws
// std::invalid_argument when spec.error_fraction is outside [0, 1].
FlipPlan plan_flips(const LabelVector& labels, const NoiseSpec& spec);

// Same as plan_flips, from class counts alone.
FlipPlan plan_flips(std::size_t n, std::size_t fraud_count, const NoiseSpec& spec);

// Copy of `labels` with plan.k_pos frauds and plan.k_neg normals inverted at
// seed-determined positions. Throws std::invalid_argument if the plan asks for
// more flips than a class holds.
LabelVector apply_flips(const LabelVector& labels, const FlipPlan& plan, std::uint64_t seed);

// The perfect classifier M: predicts exactly the labels it was trained on.
LabelVector hypothetical_model(const LabelVector& annotated);

struct DualErrorResult {
  MetricReport model_error;  // E_m: model predictions scored against annotations
  MetricReport real_error;   // E_r: model predictions scored against ground truth
};

// Ground truth is generated from annotation_noise.seed; each noise stage
// picks its flipped indices from its own spec's seed.
DualErrorResult dual_error_run(std::size_t n, double minority_fraction,
                               const NoiseSpec& annotation_noise, const NoiseSpec& model_noise,
                               double beta = 1.0);

}  // namespace imlab

#endif  // IMLAB_NOISE_HPP_
