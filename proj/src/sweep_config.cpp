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
#include <functional>
#include <stdexcept>
#include <string>

#include "imlab/sweep.hpp"

namespace imlab {

std::vector<double> flip_step_grid(std::size_t n, std::size_t step_size) {
  if (n == 0 || step_size == 0) {
    throw std::invalid_argument("flip_step_grid: n and step size must be positive");
  }
  std::vector<double> grid;
  for (std::size_t flips = 0; flips <= n; flips += step_size) {
    grid.push_back(static_cast<double>(flips) / static_cast<double>(n));
  }
  return grid;
}

std::vector<double> linear_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(start) || !std::isfinite(stop)) {
    throw std::invalid_argument("error grid step must be a positive finite number");
  }
  if (stop < start) throw std::invalid_argument("error grid stop lies below start");
  const double span = (stop - start) / step;
  const auto steps = static_cast<std::size_t>(std::floor(span * (1.0 + 1e-9) + 1e-9));
  std::vector<double> grid;
  grid.reserve(steps + 1);
  for (std::size_t i = 0; i <= steps; ++i) {
    grid.push_back(start + static_cast<double>(i) * step);
  }
  // Snap the final point onto STOP when it only missed by rounding.
  if (std::abs(grid.back() - stop) <= 1e-9 * std::max(1.0, std::abs(stop))) grid.back() = stop;
  return grid;
}

void SweepConfig::validate() const {
  if (n < 2) throw std::invalid_argument("sweep: n must be at least 2");
  if (minority_fractions.empty()) throw std::invalid_argument("sweep: no minority fractions");
  if (error_fractions.empty()) throw std::invalid_argument("sweep: no error fractions");
  if (modes.empty()) throw std::invalid_argument("sweep: no noise modes");
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("sweep: beta must be a positive finite number");
  }
  for (double f : minority_fractions) {
    if (!(f > 0.0 && f <= 0.5)) {
      throw std::invalid_argument("sweep: minority fraction " + std::to_string(f) +
                                  " outside (0, 0.5]");
    }
  }
  auto sorted = minority_fractions;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("sweep: duplicate minority fraction");
  }
  for (std::size_t i = 0; i < error_fractions.size(); ++i) {
    const double e = error_fractions[i];
    if (!(e >= 0.0 && e <= 1.0)) {
      throw std::invalid_argument("sweep: error fraction " + std::to_string(e) +
                                  " outside [0, 1]");
    }
    if (i > 0 && !(e > error_fractions[i - 1])) {
      throw std::invalid_argument("sweep: error grid must be strictly increasing");
    }
  }
}

SweepConfig SweepConfig::canonicalized() const {
  SweepConfig c = *this;
  std::sort(c.modes.begin(), c.modes.end());
  c.modes.erase(std::unique(c.modes.begin(), c.modes.end()), c.modes.end());
  std::sort(c.minority_fractions.begin(), c.minority_fractions.end(), std::greater<>());
  return c;
}

GridIndex grid_index(const SweepConfig& config, std::size_t flat) {
  const std::size_t errors = config.error_fractions.size();
  const std::size_t fractions = config.minority_fractions.size();
  return {
      .mode = flat / (fractions * errors),
      .fraction = (flat / errors) % fractions,
      .error = flat % errors,
  };
}

}  // namespace imlab
