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

#ifndef IMLAB_METRICS_HPP_
#define IMLAB_METRICS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "imlab/labels.hpp"

namespace imlab {

// Binary confusion counts with fraud as the positive class.
class ConfusionMatrix {
 public:
  // Throws std::invalid_argument on a negative count or an all-zero matrix.
  ConfusionMatrix(std::int64_t tp, std::int64_t tn, std::int64_t fp, std::int64_t fn);

  std::int64_t tp() const { return tp_; }
  std::int64_t tn() const { return tn_; }
  std::int64_t fp() const { return fp_; }
  std::int64_t fn() const { return fn_; }
  std::int64_t total() const { return tp_ + tn_ + fp_ + fn_; }

  // Positive/negative role swap: tp<->tn, fp<->fn.
  ConfusionMatrix swapped_roles() const { return {tn_, tp_, fn_, fp_}; }
  // Truth/prediction transpose: fp<->fn.
  ConfusionMatrix transposed() const { return {tp_, tn_, fn_, fp_}; }

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

 private:
  std::int64_t tp_;
  std::int64_t tn_;
  std::int64_t fp_;
  std::int64_t fn_;
};

// Counts agreement of `predicted` against the reference `truth`.
ConfusionMatrix tally(const LabelVector& truth, const LabelVector& predicted);

enum class MetricId : std::uint8_t {
  kAccuracy,
  kPrecision,
  kRecall,
  kSpecificity,
  kFpr,
  kF1,
  kFBeta,
  kGMean,
  kAurocHard,
  kCohenKappa,
  kMatthews,
};

inline constexpr std::size_t kMetricCount = 11;

inline constexpr std::array<MetricId, kMetricCount> kAllMetrics = {
    MetricId::kAccuracy,  MetricId::kPrecision, MetricId::kRecall,    MetricId::kSpecificity,
    MetricId::kFpr,       MetricId::kF1,        MetricId::kFBeta,     MetricId::kGMean,
    MetricId::kAurocHard, MetricId::kCohenKappa, MetricId::kMatthews,
};

// Stable machine name used in CSV files and plot file names, e.g. "auroc_hard".
std::string_view metric_name(MetricId id);
// Inverse of metric_name. Throws std::invalid_argument for unknown names.
MetricId metric_from_name(std::string_view name);

// A score, or the sentinel {0, false} when its denominator vanished.
struct MetricValue {
  double value = 0.0;
  bool defined = false;

  static MetricValue undefined() { return {}; }
  static MetricValue of(double v) { return {v, true}; }

  friend bool operator==(const MetricValue&, const MetricValue&) = default;
};

class MetricReport {
 public:
  MetricReport() = default;
  MetricReport(std::int64_t n, double beta) : n_(n), beta_(beta) {}

  const MetricValue& operator[](MetricId id) const { return values_[static_cast<std::size_t>(id)]; }
  MetricValue& operator[](MetricId id) { return values_[static_cast<std::size_t>(id)]; }

  std::int64_t n() const { return n_; }
  double beta() const { return beta_; }

  friend bool operator==(const MetricReport&, const MetricReport&) = default;

 private:
  std::array<MetricValue, kMetricCount> values_{};
  std::int64_t n_ = 0;
  double beta_ = 1.0;
};

struct BasicRates {
  MetricValue accuracy;
  MetricValue precision;
  MetricValue recall;
  MetricValue specificity;
  MetricValue fpr;
};

BasicRates basic_rates(const ConfusionMatrix& cm);

MetricValue f1(const ConfusionMatrix& cm);
// Throws std::invalid_argument unless beta > 0.
MetricValue f_beta(const ConfusionMatrix& cm, double beta);
MetricValue g_mean(const ConfusionMatrix& cm);
// Area under the two-segment ROC through the single hard-label operating point.
MetricValue auroc_hard(const ConfusionMatrix& cm);
MetricValue cohen_kappa(const ConfusionMatrix& cm);
MetricValue matthews(const ConfusionMatrix& cm);

MetricValue compute(const ConfusionMatrix& cm, MetricId id, double beta = 1.0);
MetricReport compute_all(const ConfusionMatrix& cm, double beta = 1.0);

// Lexicographic (F1, g-mean) pair; undefined components count as 0.
struct CompositeScore {
  double f1 = 0.0;
  double g_mean = 0.0;
};

inline constexpr double kCompositeTieTolerance = 1e-12;

CompositeScore composite_score(const ConfusionMatrix& cm);

// True when `a` ranks strictly ahead of `b`: higher F1, or F1 tied within
// kCompositeTieTolerance and higher g-mean beyond the same tolerance.
bool ranks_ahead(const CompositeScore& a, const CompositeScore& b);

// Identifiers ordered best first by composite score. Ties keep input order.
// Throws std::invalid_argument on an empty collection.
std::vector<std::string> rank_models(
    const std::vector<std::pair<std::string, ConfusionMatrix>>& models);

}  // namespace imlab

#endif  // IMLAB_METRICS_HPP_
