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

#include <fstream>
#include <map>
#include <stdexcept>
#include <tuple>

#include "imlab/reporting.hpp"
#include "imlab/svg_chart.hpp"

namespace imlab {
namespace {

bool can_be_negative(MetricId id) {
  return id == MetricId::kCohenKappa || id == MetricId::kMatthews;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace

std::vector<std::filesystem::path> emit_plots(const SweepResult& result,
                                              const std::filesystem::path& directory) {
  const SweepConfig& grid = result.config;
  if (result.rows.size() != grid.grid_size()) {
    throw std::invalid_argument("emit_plots: rows do not match the configured grid");
  }
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw std::runtime_error("cannot create '" + directory.string() + "': " + ec.message());

  // (mode, fraction) -> rows along the error axis, in grid order.
  std::map<std::pair<NoiseMode, double>, std::vector<const SweepRow*>> series;
  for (const SweepRow& row : result.rows) {
    series[{row.mode, row.minority_fraction}].push_back(&row);
  }
  const auto rows_for = [&](NoiseMode mode, double fraction) -> const std::vector<const SweepRow*>& {
    return series.at({mode, fraction});
  };

  std::vector<std::filesystem::path> written;
  for (NoiseMode mode : grid.modes) {
    for (MetricId metric : kAllMetrics) {
      SvgLineChart chart(std::string(metric_name(metric)) + " vs error (" +
                             std::string(mode_name(mode)) + ")",
                         "error fraction", std::string(metric_name(metric)));
      if (can_be_negative(metric)) chart.set_y_range(-1.0, 1.0);
      for (std::size_t f = 0; f < grid.minority_fractions.size(); ++f) {
        const double fraction = grid.minority_fractions[f];
        ChartSeries s{.label = "f=" + format_value(fraction), .color = palette_color(f), .points = {}};
        for (const SweepRow* row : rows_for(mode, fraction)) {
          const MetricValue& v = row->report[metric];
          s.points.push_back({row->error_fraction, v.value, v.defined});
        }
        chart.add_series(std::move(s));
      }
      const auto path =
          directory / (std::string(mode_name(mode)) + "_" + std::string(metric_name(metric)) + ".svg");
      write_file(path, chart.render());
      written.push_back(path);
    }
  }

  for (NoiseMode mode : grid.modes) {
    for (double fraction : grid.minority_fractions) {
      SvgLineChart chart("all metrics (" + std::string(mode_name(mode)) + ", f=" +
                             format_value(fraction) + ")",
                         "error fraction", "score");
      chart.set_y_range(-1.0, 1.0);
      for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
        const MetricId metric = kAllMetrics[m];
        ChartSeries s{.label = std::string(metric_name(metric)), .color = palette_color(m), .points = {}};
        for (const SweepRow* row : rows_for(mode, fraction)) {
          const MetricValue& v = row->report[metric];
          s.points.push_back({row->error_fraction, v.value, v.defined});
        }
        chart.add_series(std::move(s));
      }
      const auto path = directory / ("summary_" + std::string(mode_name(mode)) + "_" +
                                     format_value(fraction) + ".svg");
      write_file(path, chart.render());
      written.push_back(path);
    }
  }
  return written;
}

}  // namespace imlab
