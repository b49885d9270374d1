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
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <system_error>

#include "imlab/reporting.hpp"

namespace imlab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    fields.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

double parse_double(std::string_view text, std::size_t line, const char* field) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw DataError(std::string("invalid ") + field + " '" + std::string(text) + "'", line);
  }
  return v;
}

bool parse_flag(std::string_view text, std::size_t line, const char* field) {
  if (text == "1") return true;
  if (text == "0") return false;
  throw DataError(std::string("invalid ") + field + " '" + std::string(text) + "', expected 0 or 1",
                  line);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return in;
}

}  // namespace

DataError::DataError(const std::string& what, std::size_t line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

std::string format_value(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  return std::string(buf, ptr);
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& row : result.rows) {
    const std::string prefix = std::string(mode_name(row.mode)) + ',' +
                               format_value(row.minority_fraction) + ',' +
                               format_value(row.error_fraction) + ',';
    const char clamped = row.plan.clamped ? '1' : '0';
    for (MetricId id : kAllMetrics) {
      const MetricValue& v = row.report[id];
      out << prefix << metric_name(id) << ',' << format_value(v.value) << ','
          << (v.defined ? '1' : '0') << ',' << clamped << '\n';
    }
  }
}

void write_sweep_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  write_sweep_csv(result, out);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

SweepResult read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty sweep file");
  if (trim(line) != kSweepCsvHeader) throw DataError("unexpected sweep header", 1);

  SweepResult result;
  result.config.n = 0;
  result.config.modes.clear();
  result.config.minority_fractions.clear();
  result.config.error_fractions.clear();

  auto remember = [](auto& list, auto value) {
    if (std::find(list.begin(), list.end(), value) == list.end()) list.push_back(value);
  };

  std::size_t line_no = 1;
  std::size_t metrics_in_row = kMetricCount;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 7) throw DataError("expected 7 fields", line_no);

    NoiseMode mode;
    MetricId metric;
    try {
      mode = mode_from_name(fields[0]);
      metric = metric_from_name(fields[3]);
    } catch (const std::invalid_argument& e) {
      throw DataError(e.what(), line_no);
    }
    const double fraction = parse_double(fields[1], line_no, "minority_fraction");
    const double error = parse_double(fields[2], line_no, "error_fraction");
    const MetricValue value{parse_double(fields[4], line_no, "value"),
                            parse_flag(fields[5], line_no, "defined")};
    const bool clamped = parse_flag(fields[6], line_no, "clamped");

    if (metrics_in_row == kMetricCount) {
      result.rows.push_back({.mode = mode, .minority_fraction = fraction, .error_fraction = error,
                             .plan = {}, .report = {}});
      result.rows.back().plan.clamped = clamped;
      metrics_in_row = 0;
      remember(result.config.modes, mode);
      remember(result.config.minority_fractions, fraction);
      remember(result.config.error_fractions, error);
    }
    SweepRow& row = result.rows.back();
    if (row.mode != mode || row.minority_fraction != fraction || row.error_fraction != error) {
      throw DataError("grid point changed before all metrics were listed", line_no);
    }
    if (metric != kAllMetrics[metrics_in_row]) {
      throw DataError("metric '" + std::string(fields[3]) + "' out of order", line_no);
    }
    row.report[metric] = value;
    ++metrics_in_row;
  }
  if (result.rows.empty()) throw DataError("sweep file has no data rows");
  if (metrics_in_row != kMetricCount) throw DataError("truncated final grid point", line_no);
  if (result.rows.size() != result.config.grid_size()) {
    throw DataError("sweep rows do not form a complete mode x fraction x error grid");
  }
  return result;
}

SweepResult read_sweep_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return read_sweep_csv(in);
}

LabelPair read_labels_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty label file");
  if (trim(line) != kLabelCsvHeader) {
    throw DataError(std::string("expected header '") + kLabelCsvHeader + "'", 1);
  }
  std::vector<Label> truth, pred;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != 2) throw DataError("expected 2 fields (y_true,y_pred)", line_no);
    const auto label = [&](std::string_view s, const char* name) -> Label {
      if (s == "0") return kNormal;
      if (s == "1") return kFraud;
      throw DataError(std::string(name) + " value '" + std::string(s) + "' is not 0 or 1", line_no);
    };
    truth.push_back(label(fields[0], "y_true"));
    pred.push_back(label(fields[1], "y_pred"));
  }
  if (truth.empty()) throw DataError("label file has no data rows");
  return {LabelVector(std::move(truth)), LabelVector(std::move(pred))};
}

LabelPair read_labels_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  return read_labels_csv(in);
}

void write_labels_csv(const LabelVector& y_true, const LabelVector& y_pred, std::ostream& out) {
  if (y_true.size() != y_pred.size()) {
    throw std::invalid_argument("write_labels_csv: label vectors differ in length");
  }
  out << kLabelCsvHeader << '\n';
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    out << static_cast<int>(y_true[i]) << ',' << static_cast<int>(y_pred[i]) << '\n';
  }
}

}  // namespace imlab
