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

#ifndef IMLAB_SVG_CHART_HPP_
#define IMLAB_SVG_CHART_HPP_

#include <string>
#include <vector>

namespace imlab {

struct ChartPoint {
  double x = 0.0;
  double y = 0.0;
  bool defined = true;  // undefined points are drawn hollow
};

struct ChartSeries {
  std::string label;
  std::string color;
  std::vector<ChartPoint> points;
};

// Static SVG 1.1 line chart. Coordinates are written with fixed precision so
// identical input renders to identical bytes.
class SvgLineChart {
 public:
  SvgLineChart(std::string title, std::string x_label, std::string y_label);

  void set_y_range(double lo, double hi);
  void set_x_range(double lo, double hi);
  void add_series(ChartSeries series);

  std::string render() const;

 private:
  std::string title_;
  std::string x_label_;
  std::string y_label_;
  double x_lo_ = 0.0;
  double x_hi_ = 1.0;
  double y_lo_ = 0.0;
  double y_hi_ = 1.0;
  std::vector<ChartSeries> series_;
};

// Fixed palette, cycled by index.
const std::string& palette_color(std::size_t index);

}  // namespace imlab

#endif  // IMLAB_SVG_CHART_HPP_
