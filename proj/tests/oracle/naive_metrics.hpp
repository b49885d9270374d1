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

#ifndef IMLAB_TESTS_ORACLE_NAIVE_METRICS_HPP_
#define IMLAB_TESTS_ORACLE_NAIVE_METRICS_HPP_

// Deliberately naive reference for the confusion-matrix metrics. It counts
// straight from label pairs and writes each formula out long-hand as a single
// integer numerator over an integer denominator, so its results are
// comparable bit for bit with the library. Test-only; shares no code with
// src/.

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>

namespace imlab::oracle {

struct NaiveCounts {
  long long tp = 0, tn = 0, fp = 0, fn = 0;
};

inline NaiveCounts naive_counts(std::span<const std::uint8_t> truth,
                                std::span<const std::uint8_t> pred) {
  NaiveCounts c;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] == 1 && pred[i] == 1) c.tp += 1;
    if (truth[i] == 0 && pred[i] == 0) c.tn += 1;
    if (truth[i] == 0 && pred[i] == 1) c.fp += 1;
    if (truth[i] == 1 && pred[i] == 0) c.fn += 1;
  }
  return c;
}

// nullopt stands for "undefined".
struct NaiveMetrics {
  std::optional<double> accuracy, precision, recall, specificity, fpr, f1, fbeta, gmean, auroc,
      kappa, matthews;
};

inline std::optional<double> divide(long double num, long double den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

inline NaiveMetrics naive_metrics(const NaiveCounts& c, double beta = 1.0) {
  NaiveMetrics m;
  const long long n = c.tp + c.tn + c.fp + c.fn;
  const long long actual_yes = c.tp + c.fn;
  const long long actual_no = c.tn + c.fp;
  const long long predicted_yes = c.tp + c.fp;
  const long long predicted_no = c.tn + c.fn;

  m.accuracy = divide(c.tp + c.tn, n);
  m.precision = divide(c.tp, predicted_yes);
  m.recall = divide(c.tp, actual_yes);
  m.specificity = divide(c.tn, actual_no);
  m.fpr = divide(c.fp, actual_no);

  // F1 = 2*sens*prec/(sens+prec): defined only if both rates exist and are not both 0.
  if (m.precision && m.recall && (*m.precision + *m.recall) > 0) {
    m.f1 = divide(2 * c.tp, 2 * c.tp + c.fp + c.fn);
    const double b2 = beta * beta;
    m.fbeta = ((1.0 + b2) * c.tp) / ((1.0 + b2) * c.tp + b2 * c.fn + c.fp);
  }
  if (actual_yes > 0 && actual_no > 0) {
    m.gmean = std::sqrt(static_cast<double>(c.tp * c.tn) /
                        static_cast<double>(actual_yes * actual_no));
    m.auroc = divide(c.tp * actual_no + c.tn * actual_yes, 2 * actual_yes * actual_no);
  }
  const long long random_agree = predicted_yes * actual_yes + predicted_no * actual_no;
  m.kappa = divide(n * (c.tp + c.tn) - random_agree, n * n - random_agree);
  if (predicted_yes > 0 && actual_yes > 0 && actual_no > 0 && predicted_no > 0) {
    const long double denom_sq = static_cast<long double>(predicted_yes) * actual_yes *
                                 actual_no * predicted_no;
    m.matthews = static_cast<double>(c.tp * c.tn - c.fp * c.fn) /
                 std::sqrt(static_cast<double>(denom_sq));
  }
  return m;
}

}  // namespace imlab::oracle

#endif  // IMLAB_TESTS_ORACLE_NAIVE_METRICS_HPP_
