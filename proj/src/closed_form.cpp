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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "imlab/sweep.hpp"

namespace imlab {
namespace {

// Per-class flip counts predicted for labels with P frauds among n.
struct ClassFlips {
  double frauds;     // P
  double normals;    // N
  double fraud_flips;   // fraud -> normal
  double normal_flips;  // normal -> fraud
};

ClassFlips closed_form_flips(NoiseMode mode, std::size_t n, double fraction, double error) {
  const double total = static_cast<double>(n);
  const double frauds = std::max(1.0, std::round(total * fraction));
  const double normals = total - frauds;
  const double flips = std::round(error * total);
  if (mode == NoiseMode::kMinorityOnly) return {frauds, normals, std::min(flips, frauds), 0.0};
  // Proportional share, halves rounded up.
  const double fraud_flips = std::floor(flips * frauds / total + 0.5);
  return {frauds, normals, fraud_flips, flips - fraud_flips};
}

}  // namespace

MetricValue closed_form_expected(NoiseMode mode, std::size_t n, double minority_fraction,
                                 double error_fraction, MetricId metric, double beta) {
  if (n < 2) throw std::invalid_argument("closed_form_expected: n must be at least 2");
  const auto [P, N, kp, kn] = closed_form_flips(mode, n, minority_fraction, error_fraction);
  const double total = static_cast<double>(n);
  const double kept = P - kp;  // frauds still labelled fraud

  switch (metric) {
    case MetricId::kAccuracy:
      return MetricValue::of((total - kp - kn) / total);
    case MetricId::kPrecision:
      if (kept + kn == 0) return MetricValue::undefined();
      return MetricValue::of(kept / (kept + kn));
    case MetricId::kRecall:
      return MetricValue::of(kept / P);
    case MetricId::kSpecificity:
      return MetricValue::of((N - kn) / N);
    case MetricId::kFpr:
      return MetricValue::of(kn / N);
    case MetricId::kF1:
      if (kept == 0) return MetricValue::undefined();
      return MetricValue::of(2 * kept / (2 * P - kp + kn));
    case MetricId::kFBeta: {
      if (kept == 0) return MetricValue::undefined();
      const double w = 1 + beta * beta;
      return MetricValue::of(w * kept / (w * kept + beta * beta * kp + kn));
    }
    case MetricId::kGMean:
      return MetricValue::of(std::sqrt((1 - kp / P) * (1 - kn / N)));
    case MetricId::kAurocHard:
      return MetricValue::of(1 - (kp / P + kn / N) / 2);
    case MetricId::kCohenKappa: {
      // Marginals: truth (P, N); predictions (P - kp + kn, N - kn + kp).
      const double chance = ((kept + kn) * P + (N - kn + kp) * N);
      const double agree = total * (total - kp - kn);
      if (total * total == chance) return MetricValue::undefined();
      return MetricValue::of((agree - chance) / (total * total - chance));
    }
    case MetricId::kMatthews: {
      const double predicted_fraud = kept + kn;
      const double predicted_normal = N - kn + kp;
      if (predicted_fraud == 0 || predicted_normal == 0) return MetricValue::undefined();
      return MetricValue::of((kept * (N - kn) - kn * kp) /
                             std::sqrt(predicted_fraud * P * N * predicted_normal));
    }
  }
  throw std::invalid_argument("closed_form_expected: unknown metric");
}

}  // namespace imlab
