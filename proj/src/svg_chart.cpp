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

#include "imlab/svg_chart.hpp"

#include <array>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace imlab {
namespace {

constexpr double kWidth = 760;
constexpr double kHeight = 460;
constexpr double kLeft = 70;
constexpr double kRight = 190;  // room for the legend
constexpr double kTop = 44;
constexpr double kBottom = 60;
constexpr int kTicks = 5;

std::string fixed(double v, int digits = 2) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  std::string s(buf, ptr);
  if (s == "-0.00" || s == "-0.0" || s == "-0") s.erase(0, 1);
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

const std::string& palette_color(std::size_t index) {
  static const std::array<std::string, 11> kPalette = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
      "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#000000",
  };
  return kPalette[index % kPalette.size()];
}

SvgLineChart::SvgLineChart(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void SvgLineChart::set_y_range(double lo, double hi) {
  if (!(hi > lo)) throw std::invalid_argument("SvgLineChart: empty y range");
  y_lo_ = lo;
  y_hi_ = hi;
}

void SvgLineChart::set_x_range(double lo, double hi) {
  if (!(hi > lo)) throw std::invalid_argument("SvgLineChart: empty x range");
  x_lo_ = lo;
  x_hi_ = hi;
}

void SvgLineChart::add_series(ChartSeries series) { series_.push_back(std::move(series)); }

std::string SvgLineChart::render() const {
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_lo_) / (x_hi_ - x_lo_) * plot_w; };
  auto py = [&](double y) { return kTop + (y_hi_ - y) / (y_hi_ - y_lo_) * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed(kWidth, 0)
      << "\" height=\"" << fixed(kHeight, 0) << "\" viewBox=\"0 0 " << fixed(kWidth, 0) << ' '
      << fixed(kHeight, 0) << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << fixed(kWidth, 0) << "\" height=\"" << fixed(kHeight, 0)
      << "\" fill=\"white\"/>\n"
      << "<text x=\"" << fixed(kLeft + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-size=\"15\">" << escape(title_) << "</text>\n";

  // Grid, ticks and axes.
  svg << "<g class=\"axes\" stroke=\"#cccccc\" stroke-width=\"1\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double gx = px(x_lo_ + (x_hi_ - x_lo_) * i / kTicks);
    const double gy = py(y_lo_ + (y_hi_ - y_lo_) * i / kTicks);
    svg << "<line x1=\"" << fixed(gx) << "\" y1=\"" << fixed(kTop) << "\" x2=\"" << fixed(gx)
        << "\" y2=\"" << fixed(kTop + plot_h) << "\"/>\n";
    svg << "<line x1=\"" << fixed(kLeft) << "\" y1=\"" << fixed(gy) << "\" x2=\""
        << fixed(kLeft + plot_w) << "\" y2=\"" << fixed(gy) << "\"/>\n";
  }
  svg << "</g>\n"
      << "<rect x=\"" << fixed(kLeft) << "\" y=\"" << fixed(kTop) << "\" width=\"" << fixed(plot_w)
      << "\" height=\"" << fixed(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
  svg << "<g class=\"tick-labels\" fill=\"black\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = x_lo_ + (x_hi_ - x_lo_) * i / kTicks;
    const double yv = y_lo_ + (y_hi_ - y_lo_) * i / kTicks;
    svg << "<text x=\"" << fixed(px(xv)) << "\" y=\"" << fixed(kTop + plot_h + 18)
        << "\" text-anchor=\"middle\">" << fixed(xv, 1) << "</text>\n";
    svg << "<text x=\"" << fixed(kLeft - 8) << "\" y=\"" << fixed(py(yv) + 4)
        << "\" text-anchor=\"end\">" << fixed(yv, 1) << "</text>\n";
  }
  svg << "</g>\n"
      << "<text x=\"" << fixed(kLeft + plot_w / 2) << "\" y=\"" << fixed(kHeight - 16)
      << "\" text-anchor=\"middle\">" << escape(x_label_) << "</text>\n"
      << "<text x=\"18\" y=\"" << fixed(kTop + plot_h / 2) << "\" text-anchor=\"middle\" "
      << "transform=\"rotate(-90 18 " << fixed(kTop + plot_h / 2) << ")\">" << escape(y_label_)
      << "</text>\n";

  for (std::size_t s = 0; s < series_.size(); ++s) {
    const ChartSeries& series = series_[s];
    svg << "<g class=\"series\" data-label=\"" << escape(series.label) << "\">\n";
    if (!series.points.empty()) {
      svg << "<polyline fill=\"none\" stroke=\"" << series.color << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < series.points.size(); ++i) {
        if (i > 0) svg << ' ';
        svg << fixed(px(series.points[i].x)) << ',' << fixed(py(series.points[i].y));
      }
      svg << "\"/>\n";
    }
    for (const ChartPoint& p : series.points) {
      svg << "<circle cx=\"" << fixed(px(p.x)) << "\" cy=\"" << fixed(py(p.y)) << "\" r=\"2.5\" ";
      if (p.defined) {
        svg << "fill=\"" << series.color << "\"/>\n";
      } else {
        svg << "fill=\"white\" stroke=\"" << series.color << "\" class=\"undefined\"/>\n";
      }
    }
    svg << "</g>\n";

    const double ly = kTop + 10 + 18.0 * static_cast<double>(s);
    const double lx = kLeft + plot_w + 16;
    svg << "<line x1=\"" << fixed(lx) << "\" y1=\"" << fixed(ly) << "\" x2=\"" << fixed(lx + 22)
        << "\" y2=\"" << fixed(ly) << "\" stroke=\"" << series.color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << fixed(lx + 28) << "\" y=\"" << fixed(ly + 4) << "\">"
        << escape(series.label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace imlab
