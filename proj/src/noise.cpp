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

#include "imlab/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "imlab/random.hpp"

namespace imlab {
namespace {

// Stream tags so that one user seed drives unrelated draws independently.
constexpr std::uint64_t kGenerateStream = 0x6c6162656c73ULL;  // "labels"
constexpr std::uint64_t kFlipStream = 0x666c697073ULL;        // "flips"

__extension__ typedef unsigned __int128 WideU;

std::size_t round_count(double x) { return static_cast<std::size_t>(std::llround(x)); }

// round(a * b / d) for non-negative integers, halves rounded up.
std::size_t round_ratio(std::size_t a, std::size_t b, std::size_t d) {
  const WideU num = static_cast<WideU>(a) * b;
  return static_cast<std::size_t>((2 * num + d) / (2 * static_cast<WideU>(d)));
}

}  // namespace

std::string_view mode_name(NoiseMode mode) {
  return mode == NoiseMode::kBothClasses ? "both" : "minority-only";
}

NoiseMode mode_from_name(std::string_view name) {
  if (name == "both") return NoiseMode::kBothClasses;
  if (name == "minority-only") return NoiseMode::kMinorityOnly;
  throw std::invalid_argument("unknown noise mode '" + std::string(name) + "'");
}

std::size_t fraud_count_for(std::size_t n, double minority_fraction) {
  return std::max<std::size_t>(1, round_count(static_cast<double>(n) * minority_fraction));
}

LabelVector generate_labels(std::size_t n, double minority_fraction, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("generate_labels: n must be at least 2");
  if (!(minority_fraction > 0.0 && minority_fraction <= 0.5)) {
    throw std::invalid_argument("generate_labels: minority fraction must lie in (0, 0.5]");
  }
  const std::size_t frauds = fraud_count_for(n, minority_fraction);
  std::vector<std::size_t> positions(n);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  Engine engine(derive_seed(seed, {kGenerateStream}));
  partial_shuffle(engine, positions, frauds);

  std::vector<Label> values(n, kNormal);
  for (std::size_t i = 0; i < frauds; ++i) values[positions[i]] = kFraud;
  return LabelVector(std::move(values));
}

FlipPlan plan_flips(std::size_t n, std::size_t fraud_count, const NoiseSpec& spec) {
  if (!(spec.error_fraction >= 0.0 && spec.error_fraction <= 1.0)) {
    throw std::invalid_argument("plan_flips: error fraction must lie in [0, 1]");
  }
  if (fraud_count > n) throw std::invalid_argument("plan_flips: more frauds than instances");
  const std::size_t normal_count = n - fraud_count;

  FlipPlan plan;
  plan.k_total = round_count(spec.error_fraction * static_cast<double>(n));
  switch (spec.mode) {
    case NoiseMode::kBothClasses: {
      // Stratified split: frauds receive their proportional share.
      const std::size_t want_pos = n == 0 ? 0 : round_ratio(plan.k_total, fraud_count, n);
      const std::size_t want_neg = plan.k_total - want_pos;
      plan.k_pos = std::min(want_pos, fraud_count);
      plan.k_neg = std::min(want_neg, normal_count);
      plan.clamped = plan.k_pos != want_pos || plan.k_neg != want_neg;
      break;
    }
    case NoiseMode::kMinorityOnly:
      plan.k_pos = std::min(plan.k_total, fraud_count);
      plan.k_neg = 0;
      plan.clamped = plan.k_total > fraud_count;
      break;
  }
  return plan;
}

FlipPlan plan_flips(const LabelVector& labels, const NoiseSpec& spec) {
  return plan_flips(labels.size(), labels.fraud_count(), spec);
}

LabelVector apply_flips(const LabelVector& labels, const FlipPlan& plan, std::uint64_t seed) {
  std::vector<std::size_t> frauds, normals;
  frauds.reserve(labels.fraud_count());
  normals.reserve(labels.normal_count());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    (labels[i] == kFraud ? frauds : normals).push_back(i);
  }
  if (plan.k_pos > frauds.size() || plan.k_neg > normals.size()) {
    throw std::invalid_argument("apply_flips: plan requests " + std::to_string(plan.k_pos) +
                                " fraud and " + std::to_string(plan.k_neg) +
                                " normal flips but labels hold " + std::to_string(frauds.size()) +
                                " and " + std::to_string(normals.size()));
  }
  if (plan.k_pos + plan.k_neg > plan.k_total) {
    throw std::invalid_argument("apply_flips: per-class flips exceed k_total");
  }

  Engine engine(derive_seed(seed, {kFlipStream}));
  partial_shuffle(engine, frauds, plan.k_pos);
  partial_shuffle(engine, normals, plan.k_neg);

  std::vector<Label> out(labels.values().begin(), labels.values().end());
  for (std::size_t i = 0; i < plan.k_pos; ++i) out[frauds[i]] = kNormal;
  for (std::size_t i = 0; i < plan.k_neg; ++i) out[normals[i]] = kFraud;
  return LabelVector(std::move(out));
}

LabelVector hypothetical_model(const LabelVector& annotated) { return annotated; }

DualErrorResult dual_error_run(std::size_t n, double minority_fraction,
                               const NoiseSpec& annotation_noise, const NoiseSpec& model_noise,
                               double beta) {
  const LabelVector truth = generate_labels(n, minority_fraction, annotation_noise.seed);
  const LabelVector annotated =
      apply_flips(truth, plan_flips(truth, annotation_noise), annotation_noise.seed);
  const LabelVector learned = hypothetical_model(annotated);
  const LabelVector predicted =
      apply_flips(learned, plan_flips(learned, model_noise), model_noise.seed);
  return {
      .model_error = compute_all(tally(annotated, predicted), beta),
      .real_error = compute_all(tally(truth, predicted), beta),
  };
}

}  // namespace imlab
