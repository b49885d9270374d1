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

#include "imlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace imlab {
namespace {

__extension__ typedef __int128 Wide;

// Every metric below is a ratio of exact integer expressions; the only
// floating-point rounding happens at the final division (and sqrt).
double ratio(Wide num, Wide den) { return static_cast<double>(num) / static_cast<double>(den); }

MetricValue safe_ratio(Wide num, Wide den) {
  if (den == 0) return MetricValue::undefined();
  return MetricValue::of(ratio(num, den));
}

constexpr std::array<std::string_view, kMetricCount> kNames = {
    "accuracy", "precision", "recall",     "specificity", "fpr",      "f1",
    "fbeta",    "gmean",     "auroc_hard", "cohen_kappa", "matthews",
};

}  // namespace

ConfusionMatrix::ConfusionMatrix(std::int64_t tp, std::int64_t tn, std::int64_t fp,
                                 std::int64_t fn)
    : tp_(tp), tn_(tn), fp_(fp), fn_(fn) {
  if (tp < 0 || tn < 0 || fp < 0 || fn < 0) {
    throw std::invalid_argument("confusion matrix counts must be non-negative");
  }
  if (total() == 0) {
    throw std::invalid_argument("confusion matrix must hold at least one instance");
  }
}

ConfusionMatrix tally(const LabelVector& truth, const LabelVector& predicted) {
  if (truth.size() != predicted.size()) {
    throw std::invalid_argument("tally: truth has " + std::to_string(truth.size()) +
                                " labels but predictions have " +
                                std::to_string(predicted.size()));
  }
  // Index the 2x2 table by (truth << 1) | predicted.
  std::array<std::int64_t, 4> cells{};
  const auto t = truth.values();
  const auto p = predicted.values();
  for (std::size_t i = 0; i < t.size(); ++i) {
    ++cells[(t[i] << 1) | p[i]];
  }
  return {cells[3], cells[0], cells[1], cells[2]};
}

std::string_view metric_name(MetricId id) { return kNames[static_cast<std::size_t>(id)]; }

MetricId metric_from_name(std::string_view name) {
  const auto it = std::find(kNames.begin(), kNames.end(), name);
  if (it == kNames.end()) {
    throw std::invalid_argument("unknown metric '" + std::string(name) + "'");
  }
  return static_cast<MetricId>(it - kNames.begin());
}

BasicRates basic_rates(const ConfusionMatrix& cm) {
  const std::int64_t tp = cm.tp(), tn = cm.tn(), fp = cm.fp(), fn = cm.fn();
  return {
      .accuracy = safe_ratio(tp + tn, cm.total()),
      .precision = safe_ratio(tp, tp + fp),
      .recall = safe_ratio(tp, tp + fn),
      .specificity = safe_ratio(tn, tn + fp),
      .fpr = safe_ratio(fp, fp + tn),
  };
}

MetricValue f1(const ConfusionMatrix& cm) {
  // 2PR/(P+R) = 2tp/(2tp+fp+fn); undefined when either rate is undefined or
  // both are zero (tp = 0).
  if (cm.tp() == 0) return MetricValue::undefined();
  return MetricValue::of(ratio(Wide{2} * cm.tp(), Wide{2} * cm.tp() + cm.fp() + cm.fn()));
}

MetricValue f_beta(const ConfusionMatrix& cm, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("f_beta: beta must be a positive finite number");
  }
  // (1+b2)PR/(b2 P + R) = (1+b2)tp / ((1+b2)tp + b2 fn + fp). For beta = 1
  // every term is an exact integer, so this matches f1() bit for bit.
  if (cm.tp() == 0) return MetricValue::undefined();
  const double b2 = beta * beta;
  const double weighted_tp = (1.0 + b2) * static_cast<double>(cm.tp());
  return MetricValue::of(weighted_tp /
                         (weighted_tp + b2 * static_cast<double>(cm.fn()) +
                          static_cast<double>(cm.fp())));
}

MetricValue g_mean(const ConfusionMatrix& cm) {
  const Wide pos = cm.tp() + cm.fn();
  const Wide neg = cm.tn() + cm.fp();
  if (pos == 0 || neg == 0) return MetricValue::undefined();
  return MetricValue::of(std::sqrt(ratio(Wide{cm.tp()} * cm.tn(), pos * neg)));
}

MetricValue auroc_hard(const ConfusionMatrix& cm) {
  // (TPR + TNR) / 2 over a common denominator.
  const Wide pos = cm.tp() + cm.fn();
  const Wide neg = cm.tn() + cm.fp();
  if (pos == 0 || neg == 0) return MetricValue::undefined();
  return MetricValue::of(ratio(Wide{cm.tp()} * neg + Wide{cm.tn()} * pos, 2 * pos * neg));
}

MetricValue cohen_kappa(const ConfusionMatrix& cm) {
  // (p_o - p_e)/(1 - p_e), both scaled by n^2.
  const Wide n = cm.total();
  const Wide chance = Wide{cm.tp() + cm.fp()} * (cm.tp() + cm.fn()) +
                      Wide{cm.fn() + cm.tn()} * (cm.fp() + cm.tn());
  const Wide observed = n * (cm.tp() + cm.tn());
  return safe_ratio(observed - chance, n * n - chance);
}

MetricValue matthews(const ConfusionMatrix& cm) {
  const Wide pred_pos = cm.tp() + cm.fp();
  const Wide pos = cm.tp() + cm.fn();
  const Wide neg = cm.tn() + cm.fp();
  const Wide pred_neg = cm.tn() + cm.fn();
  if (pred_pos == 0 || pos == 0 || neg == 0 || pred_neg == 0) return MetricValue::undefined();
  const Wide num = Wide{cm.tp()} * cm.tn() - Wide{cm.fp()} * cm.fn();
  const Wide den2 = pred_pos * pos * neg * pred_neg;
  return MetricValue::of(static_cast<double>(num) / std::sqrt(static_cast<double>(den2)));
}

MetricValue compute(const ConfusionMatrix& cm, MetricId id, double beta) {
  switch (id) {
    case MetricId::kAccuracy: return basic_rates(cm).accuracy;
    case MetricId::kPrecision: return basic_rates(cm).precision;
    case MetricId::kRecall: return basic_rates(cm).recall;
    case MetricId::kSpecificity: return basic_rates(cm).specificity;
    case MetricId::kFpr: return basic_rates(cm).fpr;
    case MetricId::kF1: return f1(cm);
    case MetricId::kFBeta: return f_beta(cm, beta);
    case MetricId::kGMean: return g_mean(cm);
    case MetricId::kAurocHard: return auroc_hard(cm);
    case MetricId::kCohenKappa: return cohen_kappa(cm);
    case MetricId::kMatthews: return matthews(cm);
  }
  throw std::invalid_argument("compute: unknown metric id");
}

MetricReport compute_all(const ConfusionMatrix& cm, double beta) {
  MetricReport report(cm.total(), beta);
  const BasicRates rates = basic_rates(cm);
  report[MetricId::kAccuracy] = rates.accuracy;
  report[MetricId::kPrecision] = rates.precision;
  report[MetricId::kRecall] = rates.recall;
  report[MetricId::kSpecificity] = rates.specificity;
  report[MetricId::kFpr] = rates.fpr;
  report[MetricId::kF1] = f1(cm);
  report[MetricId::kFBeta] = f_beta(cm, beta);
  report[MetricId::kGMean] = g_mean(cm);
  report[MetricId::kAurocHard] = auroc_hard(cm);
  report[MetricId::kCohenKappa] = cohen_kappa(cm);
  report[MetricId::kMatthews] = matthews(cm);
  return report;
}

CompositeScore composite_score(const ConfusionMatrix& cm) {
  return {f1(cm).value, g_mean(cm).value};
}

bool ranks_ahead(const CompositeScore& a, const CompositeScore& b) {
  if (std::abs(a.f1 - b.f1) > kCompositeTieTolerance) return a.f1 > b.f1;
  return a.g_mean - b.g_mean > kCompositeTieTolerance;
}

std::vector<std::string> rank_models(
    const std::vector<std::pair<std::string, ConfusionMatrix>>& models) {
  if (models.empty()) {
    throw std::invalid_argument("rank_models: no models to rank");
  }
  struct Entry {
    const std::string* id;
    CompositeScore score;
  };
  std::vector<Entry> entries;
  entries.reserve(models.size());
  for (const auto& [id, cm] : models) {
    entries.push_back({&id, composite_score(cm)});
  }
  // Tolerance-based ties are not transitive, so std::stable_sort's strict
  // weak ordering requirement does not hold. Insertion sort only moves an
  // entry past neighbours it strictly beats, which keeps ties in input order.
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const Entry current = entries[i];
    std::size_t j = i;
    while (j > 0 && ranks_ahead(current.score, entries[j - 1].score)) {
      entries[j] = entries[j - 1];
      --j;
    }
    entries[j] = current;
  }
  std::vector<std::string> ranked;
  ranked.reserve(entries.size());
  for (const Entry& e : entries) ranked.push_back(*e.id);
  return ranked;
}

}  // namespace imlab
