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

#ifndef IMLAB_SWEEP_HPP_
#define IMLAB_SWEEP_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "imlab/metrics.hpp"
#include "imlab/noise.hpp"

namespace imlab {

inline constexpr std::size_t kPaperN = 10'000;
inline constexpr std::uint64_t kPaperSeed = 1'234'567'890;
inline constexpr std::size_t kPaperStepSize = 1'000;

// {0, step/n, 2*step/n, ...} up to and including 1 when it lands on the grid.
std::vector<double> flip_step_grid(std::size_t n, std::size_t step_size);

// START, START+STEP, ... up to STOP (inclusive when STOP lands on the grid
// within a 1e-9 relative slack). Throws std::invalid_argument for step <= 0
// or stop < start.
std::vector<double> linear_grid(double start, double stop, double step);

struct SweepConfig {
  std::size_t n = kPaperN;
  std::uint64_t seed = kPaperSeed;
  std::vector<double> minority_fractions = {0.5, 0.1, 0.01, 0.001, 0.0001};
  std::vector<double> error_fractions = flip_step_grid(kPaperN, kPaperStepSize);
  std::vector<NoiseMode> modes = {NoiseMode::kBothClasses, NoiseMode::kMinorityOnly};
  double beta = 1.0;

  // The experimental grid used throughout: N = 10,000, seed 1234567890,
  // STEP_SIZE 1000 flips per error step, five minority fractions, both modes.
  static SweepConfig paper_defaults() { return {}; }

  // Throws std::invalid_argument describing the first violated constraint.
  void validate() const;

  // Canonical axis orders: modes in enum order without duplicates, fractions
  // descending. The error grid is required to be strictly increasing already.
  SweepConfig canonicalized() const;

  std::size_t grid_size() const {
    return modes.size() * minority_fractions.size() * error_fractions.size();
  }
};

struct SweepRow {
  NoiseMode mode = NoiseMode::kBothClasses;
  double minority_fraction = 0.0;
  double error_fraction = 0.0;
  FlipPlan plan;
  MetricReport report;
};

struct SweepResult {
  SweepConfig config;  // canonicalized
  std::vector<SweepRow> rows;
};

// Position of a grid point along each canonical axis.
struct GridIndex {
  std::size_t mode = 0;
  std::size_t fraction = 0;
  std::size_t error = 0;
};

// Row-major index in (mode, fraction, error) order.
GridIndex grid_index(const SweepConfig& config, std::size_t flat);

// Ground truth for fraction i comes from derive_seed(seed, {0, i}); flips at
// (mode m, fraction i, error j) come from derive_seed(seed, {1, m, i, j}).
// Each grid point is independent of every other.
SweepRow evaluate_grid_point(const SweepConfig& config, const GridIndex& index);

// Reference implementation: one grid point after another.
SweepResult run_sweep_serial(const SweepConfig& config);

// OpenMP over grid points. threads == 0 uses the OpenMP default. Output is
// identical to run_sweep_serial.
SweepResult run_sweep_parallel(const SweepConfig& config, int threads = 0);

inline SweepResult run_sweep(const SweepConfig& config, int threads = 0) {
  return run_sweep_parallel(config, threads);
}

// Analytic value of `metric` at a grid point, computed from the closed-form
// per-class flip counts without generating labels. Independent of the
// metrics module arithmetic.
MetricValue closed_form_expected(NoiseMode mode, std::size_t n, double minority_fraction,
                                 double error_fraction, MetricId metric, double beta = 1.0);

}  // namespace imlab

#endif  // IMLAB_SWEEP_HPP_
