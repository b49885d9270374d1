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

// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "imlab/cli.hpp"
#include "imlab/metrics.hpp"
#include "imlab/noise.hpp"
#include "imlab/reporting.hpp"
#include "imlab/sweep.hpp"
#include "oracle/naive_metrics.hpp"
#include "test_util.hpp"

namespace imlab {
namespace {

constexpr double kTol = 1e-12;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(NoiseMode mode, double f, double e, MetricId id) {
  std::ostringstream s;
  s << mode_name(mode) << " f=" << f << " e=" << e << " " << metric_name(id);
  return s.str();
}

std::vector<ConfusionMatrix> random_matrices(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> cell(0, 20000);
  std::bernoulli_distribution zero(0.1);
  std::vector<ConfusionMatrix> out;
  while (out.size() < count) {
    std::int64_t v[4];
    for (auto& x : v) x = zero(rng) ? 0 : cell(rng);
    if (v[0] + v[1] + v[2] + v[3] > 0) out.emplace_back(v[0], v[1], v[2], v[3]);
  }
  return out;
}

void check_perfect(const MetricReport& r, const std::string& where, Outcome& o) {
  for (MetricId id : kAllMetrics) {
    const MetricValue want = MetricValue::of(id == MetricId::kFpr ? 0.0 : 1.0);
    if (r[id] != want) o.fail(where + " " + std::string(metric_name(id)) + " not perfect");
  }
}

Outcome ac1_zero_error_perfection() {
  Outcome o;
  const auto start = Clock::now();
  SweepConfig c = SweepConfig::paper_defaults();
  c.error_fractions = {0.0};
  const SweepResult r = run_sweep(c);
  for (const SweepRow& row : r.rows) {
    check_perfect(row.report, describe(row.mode, row.minority_fraction, 0.0, MetricId::kAccuracy), o);
  }
  if (r.rows.size() != 10) o.fail("expected 10 (mode, fraction) points");
  const double t = seconds_since(start);
  if (t >= 1.0) o.fail("runtime " + std::to_string(t) + " s >= 1 s");
  return o;
}

Outcome ac2_balanced_linearity() {
  Outcome o;
  const auto start = Clock::now();
  SweepConfig c = SweepConfig::paper_defaults();
  c.modes = {NoiseMode::kBothClasses};
  c.minority_fractions = {0.5};
  const SweepResult r = run_sweep(c);
  for (const SweepRow& row : r.rows) {
    const double e = row.error_fraction;
    for (MetricId id : {MetricId::kAccuracy, MetricId::kPrecision, MetricId::kRecall,
                        MetricId::kF1, MetricId::kGMean, MetricId::kAurocHard}) {
      if (std::abs(row.report[id].value - (1.0 - e)) > kTol) o.fail(describe(row.mode, 0.5, e, id));
    }
    if (std::abs(row.report[MetricId::kCohenKappa].value - (1.0 - 2.0 * e)) > kTol) {
      o.fail(describe(row.mode, 0.5, e, MetricId::kCohenKappa));
    }
  }
  const double t = seconds_since(start);
  if (t >= 1.0) o.fail("runtime " + std::to_string(t) + " s >= 1 s");
  return o;
}

Outcome ac3_accuracy_insensitivity() {
  Outcome o;
  SweepConfig c = SweepConfig::paper_defaults();
  c.modes = {NoiseMode::kMinorityOnly};
  c.minority_fractions = {0.0001};
  const SweepResult r = run_sweep(c);
  bool recall_hits_zero = false;
  for (const SweepRow& row : r.rows) {
    const double acc = row.report[MetricId::kAccuracy].value;
    if (acc < 0.9998) o.fail("accuracy " + format_value(acc) + " at e=" + format_value(row.error_fraction));
    for (MetricId id : {MetricId::kAccuracy, MetricId::kRecall}) {
      const MetricValue want = closed_form_expected(row.mode, c.n, 0.0001, row.error_fraction, id);
      if (std::abs(row.report[id].value - want.value) > kTol) {
        o.fail(describe(row.mode, 0.0001, row.error_fraction, id) + " off closed form");
      }
    }
    if (row.report[MetricId::kRecall] == MetricValue::of(0.0)) recall_hits_zero = true;
  }
  if (!recall_hits_zero) o.fail("recall never reaches 0");
  return o;
}

Outcome ac4_closed_form_grid() {
  Outcome o;
  const auto start = Clock::now();
  const SweepConfig c = SweepConfig::paper_defaults();
  const SweepResult r = run_sweep(c);
  std::size_t compared = 0;
  for (const SweepRow& row : r.rows) {
    for (MetricId id : kAllMetrics) {
      const MetricValue want =
          closed_form_expected(row.mode, c.n, row.minority_fraction, row.error_fraction, id, c.beta);
      const MetricValue& got = row.report[id];
      if (got.defined != want.defined || std::abs(got.value - want.value) > kTol) {
        o.fail(describe(row.mode, row.minority_fraction, row.error_fraction, id));
      }
      ++compared;
    }
  }
  if (compared != 110 * 11) o.fail("compared " + std::to_string(compared) + " values, expected 1210");
  const double t = seconds_since(start);
  if (t >= 5.0) o.fail("runtime " + std::to_string(t) + " s >= 5 s");
  return o;
}

void expect_exact(const MetricValue& got, const std::optional<double>& want, const char* name,
                  Outcome& o) {
  const bool same = got.defined == want.has_value() && got.value == want.value_or(0.0);
  if (!same) o.fail(std::string(name) + " disagrees with oracle");
}

Outcome ac5_bruteforce_oracle() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t pairs = 0;
  for (std::uint32_t t = 0; t < 64; ++t) {
    for (std::uint32_t p = 0; p < 64; ++p) {
      std::vector<Label> truth(6), pred(6);
      for (int i = 0; i < 6; ++i) {
        truth[i] = (t >> i) & 1u;
        pred[i] = (p >> i) & 1u;
      }
      const auto want = oracle::naive_metrics(oracle::naive_counts(truth, pred));
      const MetricReport r = compute_all(tally(LabelVector(truth), LabelVector(pred)));
      expect_exact(r[MetricId::kAccuracy], want.accuracy, "accuracy", o);
      expect_exact(r[MetricId::kPrecision], want.precision, "precision", o);
      expect_exact(r[MetricId::kRecall], want.recall, "recall", o);
      expect_exact(r[MetricId::kSpecificity], want.specificity, "specificity", o);
      expect_exact(r[MetricId::kFpr], want.fpr, "fpr", o);
      expect_exact(r[MetricId::kF1], want.f1, "f1", o);
      expect_exact(r[MetricId::kFBeta], want.fbeta, "fbeta", o);
      expect_exact(r[MetricId::kGMean], want.gmean, "gmean", o);
      expect_exact(r[MetricId::kAurocHard], want.auroc, "auroc_hard", o);
      expect_exact(r[MetricId::kCohenKappa], want.kappa, "cohen_kappa", o);
      expect_exact(r[MetricId::kMatthews], want.matthews, "matthews", o);
      ++pairs;
    }
  }
  if (pairs != 4096) o.fail("enumerated " + std::to_string(pairs) + " pairs");
  const double t = seconds_since(start);
  if (t >= 10.0) o.fail("runtime " + std::to_string(t) + " s >= 10 s");
  return o;
}

Outcome ac6_fbeta_reduction() {
  Outcome o;
  for (const ConfusionMatrix& cm : random_matrices(1000, 6)) {
    const MetricValue fb = f_beta(cm, 1.0);
    const MetricValue f = f1(cm);
    if (fb.defined != f.defined || std::abs(fb.value - f.value) > kTol) o.fail("f_beta(1) != f1");
  }
  return o;
}

Outcome ac7_symmetry() {
  Outcome o;
  for (const ConfusionMatrix& cm : random_matrices(1000, 7)) {
    if (matthews(cm.transposed()) != matthews(cm)) o.fail("matthews changes under fp<->fn");
    if (cohen_kappa(cm.transposed()) != cohen_kappa(cm)) o.fail("kappa changes under fp<->fn");
    if (basic_rates(cm.swapped_roles()).accuracy != basic_rates(cm).accuracy) {
      o.fail("accuracy changes under class-role swap");
    }
  }
  return o;
}

// Every regular file under `root`, keyed by relative path.
std::map<std::string, std::string> snapshot(const std::filesystem::path& root) {
  std::map<std::string, std::string> files;
  for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
    if (e.is_regular_file()) {
      files[std::filesystem::relative(e.path(), root).generic_string()] = testing_util::read_file(e.path());
    }
  }
  return files;
}

int cli_sweep(const std::filesystem::path& out_dir, const char* threads) {
  if (threads) ::setenv("IMLAB_THREADS", threads, 1);
  else ::unsetenv("IMLAB_THREADS");
  std::ostringstream out, err;
  const int code = run_cli({"imlab", "sweep", "--paper-defaults", "--plots", "--out", out_dir.string()}, out, err);
  ::unsetenv("IMLAB_THREADS");
  return code;
}

Outcome ac8_determinism() {
  Outcome o;
  testing_util::TempDir first("ac8_first"), second("ac8_second"), serial("ac8_serial"), wide("ac8_wide");
  if (cli_sweep(first.path(), nullptr) != kExitOk || cli_sweep(second.path(), nullptr) != kExitOk ||
      cli_sweep(serial.path(), "1") != kExitOk || cli_sweep(wide.path(), "4") != kExitOk) {
    o.fail("sweep --paper-defaults did not exit 0");
    return o;
  }
  const auto reference = snapshot(first.path());
  if (reference.size() != 33) o.fail("expected sweep.csv + 32 SVGs, got " + std::to_string(reference.size()));
  if (snapshot(second.path()) != reference) o.fail("repeat run differs");
  if (snapshot(serial.path()) != reference) o.fail("serial (IMLAB_THREADS=1) run differs");
  if (snapshot(wide.path()) != reference) o.fail("4-thread run differs");
  return o;
}

Outcome ac9_composite_ranking() {
  Outcome o;
  std::mt19937_64 rng(9);
  const auto pool = random_matrices(2000, 90);
  std::uniform_int_distribution<std::int64_t> cell(1, 5000);
  for (std::size_t i = 0; i < 1000; ++i) {
    ConfusionMatrix a = pool[2 * i];
    ConfusionMatrix b = pool[2 * i + 1];
    if (i % 2 == 1) {
      // Force an exact F1 tie: same tp and fp+fn, different split and tn.
      const std::int64_t tp = cell(rng), errors = cell(rng), split = cell(rng) % (errors + 1);
      a = ConfusionMatrix(tp, cell(rng), split, errors - split);
      b = ConfusionMatrix(tp, cell(rng), errors - split, split);
    }
    const CompositeScore sa = composite_score(a), sb = composite_score(b);
    const auto ranked = rank_models({{"A", a}, {"B", b}});
    std::string expected_first = "A";
    if (std::abs(sa.f1 - sb.f1) > kTol) {
      expected_first = sa.f1 > sb.f1 ? "A" : "B";
    } else if (std::abs(sa.g_mean - sb.g_mean) > kTol) {
      expected_first = sa.g_mean > sb.g_mean ? "A" : "B";
    }
    if (ranked.size() != 2 || ranked[0] != expected_first) o.fail("pair " + std::to_string(i) + " misordered");
  }
  return o;
}

Outcome ac10_dual_error_identity() {
  Outcome o;
  const SweepConfig grid = SweepConfig::paper_defaults();
  for (NoiseMode mode : grid.modes) {
    for (double f : grid.minority_fractions) {
      for (double e : grid.error_fractions) {
        const NoiseSpec annotation{e, mode, 101};
        const NoiseSpec model{0.0, mode, 202};
        const DualErrorResult r = dual_error_run(grid.n, f, annotation, model);
        // E_m is perfect agreement with the annotations. When annotation noise
        // has inverted every fraud the annotations are single-class, and the
        // positive-class metrics are undefined rather than 1.
        const FlipPlan plan = plan_flips(grid.n, fraud_count_for(grid.n, f), annotation);
        const auto annotated_frauds =
            static_cast<std::int64_t>(fraud_count_for(grid.n, f) - plan.k_pos + plan.k_neg);
        const auto n = static_cast<std::int64_t>(grid.n);
        const MetricReport agreement =
            compute_all(ConfusionMatrix(annotated_frauds, n - annotated_frauds, 0, 0));
        if (r.model_error != agreement) o.fail(describe(mode, f, e, MetricId::kAccuracy) + " E_m");
        if (annotated_frauds > 0 && annotated_frauds < n) {
          check_perfect(r.model_error, describe(mode, f, e, MetricId::kAccuracy) + " E_m", o);
        }
        for (MetricId id : kAllMetrics) {
          const MetricValue& v = r.model_error[id];
          if (v.defined && v.value != (id == MetricId::kFpr ? 0.0 : 1.0)) {
            o.fail(describe(mode, f, e, id) + " E_m defined entry not perfect");
          }
        }
        for (MetricId id : kAllMetrics) {
          const MetricValue want = closed_form_expected(mode, grid.n, f, e, id);
          const MetricValue& got = r.real_error[id];
          if (got.defined != want.defined || std::abs(got.value - want.value) > kTol) {
            o.fail(describe(mode, f, e, id) + " E_r");
          }
        }
      }
    }
  }
  return o;
}

}  // namespace
}  // namespace imlab

int main() {
  using namespace imlab;
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1  zero-error perfection over the paper grid (< 1 s)", ac1_zero_error_perfection},
      {"AC2  balanced linearity at f=0.5, both classes (1e-12, < 1 s)", ac2_balanced_linearity},
      {"AC3  accuracy >= 0.9998 at f=0.0001 minority-only while recall hits 0", ac3_accuracy_insensitivity},
      {"AC4  default sweep == closed form, 110 x 11 values (1e-12, < 5 s)", ac4_closed_form_grid},
      {"AC5  exhaustive length-6 oracle agreement, 4096 pairs (exact, < 10 s)", ac5_bruteforce_oracle},
      {"AC6  f_beta(1) == F1 on 1000 random matrices (1e-12)", ac6_fbeta_reduction},
      {"AC7  MCC/kappa transpose and accuracy role-swap invariance, 1000 matrices", ac7_symmetry},
      {"AC8  byte-identical CSV + SVG across repeat, serial and parallel runs", ac8_determinism},
      {"AC9  composite ranking follows F1 then g-mean, 1000 pairs", ac9_composite_ranking},
      {"AC10 dual-error identity with zero model noise over the paper grid", ac10_dual_error_identity},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double ms = seconds_since(start) * 1e3;
    std::printf("[%s] %s (%.1f ms)%s%s\n", o.ok ? "PASS" : "FAIL", c.name, ms,
                o.ok ? "" : " -- ", o.detail.c_str());
    failures += o.ok ? 0 : 1;
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
