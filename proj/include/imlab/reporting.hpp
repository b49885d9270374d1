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

#ifndef IMLAB_REPORTING_HPP_
#define IMLAB_REPORTING_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "imlab/labels.hpp"
#include "imlab/sweep.hpp"

namespace imlab {

// Malformed or unreadable input data. line() is 1-based, 0 when not tied to a line.
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& what, std::size_t line = 0);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Shortest round-trippable rendering at 12 significant digits, locale independent.
std::string format_value(double value);

inline constexpr const char* kSweepCsvHeader =
    "mode,minority_fraction,error_fraction,metric,value,defined,clamped";
inline constexpr const char* kLabelCsvHeader = "y_true,y_pred";

// One line per (grid row, metric) in canonical order, LF line endings.
void write_sweep_csv(const SweepResult& result, std::ostream& out);
void write_sweep_csv(const SweepResult& result, const std::filesystem::path& path);

// Rebuilds rows and axis lists from a sweep CSV. n and the per-class flip
// counts are not stored, so config.n is 0 and only plan.clamped is restored.
SweepResult read_sweep_csv(std::istream& in);
SweepResult read_sweep_csv(const std::filesystem::path& path);

struct LabelPair {
  LabelVector y_true;
  LabelVector y_pred;
};

LabelPair read_labels_csv(std::istream& in);
LabelPair read_labels_csv(const std::filesystem::path& path);

void write_labels_csv(const LabelVector& y_true, const LabelVector& y_pred, std::ostream& out);

// Writes <mode>_<metric>.svg for every (mode, metric) and
// summary_<mode>_<fraction>.svg for every (mode, fraction). Returns the paths
// written, in that order.
std::vector<std::filesystem::path> emit_plots(const SweepResult& result,
                                              const std::filesystem::path& directory);

}  // namespace imlab

#endif  // IMLAB_REPORTING_HPP_
