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

#include "imlab/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "imlab/metrics.hpp"
#include "imlab/reporting.hpp"
#include "imlab/sweep.hpp"

namespace imlab {
namespace {

namespace fs = std::filesystem;

// Thrown for flag values that parse but make no sense; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepArgs {
  std::size_t n = kPaperN;
  std::uint64_t seed = kPaperSeed;
  std::vector<double> minority;
  std::string errors;
  std::string mode = "all";
  double beta = 1.0;
  std::string out;
  bool paper_defaults = false;
  bool plots = false;
};

std::vector<double> parse_error_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--errors: '" + item + "' is not a number");
    }
  }
  if (parts.size() != 3) throw UsageError("--errors expects START:STOP:STEP");
  try {
    return linear_grid(parts[0], parts[1], parts[2]);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--errors: ") + e.what());
  }
}

// 0 means "not set".
int thread_cap_from_env() {
  const char* raw = std::getenv("IMLAB_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v <= 0 || v > 4096) {
    throw UsageError(std::string("IMLAB_THREADS must be a positive integer, got '") + raw + "'");
  }
  return static_cast<int>(v);
}

SweepConfig build_config(const SweepArgs& a) {
  SweepConfig config = SweepConfig::paper_defaults();
  if (!a.paper_defaults) {
    config.n = a.n;
    config.seed = a.seed;
    if (!a.minority.empty()) config.minority_fractions = a.minority;
    if (!a.errors.empty()) {
      config.error_fractions = parse_error_grid(a.errors);
    } else if (config.n > 0) {
      config.error_fractions = flip_step_grid(config.n, kPaperStepSize);
    }
  }
  if (a.mode == "both") {
    config.modes = {NoiseMode::kBothClasses};
  } else if (a.mode == "minority-only") {
    config.modes = {NoiseMode::kMinorityOnly};
  }
  config.beta = a.beta;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return config;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const SweepConfig config = build_config(a);
  const int cap = thread_cap_from_env();
  const SweepResult result = cap == 1 ? run_sweep_serial(config) : run_sweep_parallel(config, cap);

  const fs::path dir(a.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create '" + dir.string() + "': " + ec.message());
  const fs::path csv = dir / "sweep.csv";
  write_sweep_csv(result, csv);
  out << "wrote " << csv.generic_string() << " (" << result.rows.size() << " grid points, "
      << result.rows.size() * kMetricCount << " data lines)\n";
  if (a.plots) {
    const auto files = emit_plots(result, dir / "plots");
    out << "wrote " << files.size() << " SVG files to " << (dir / "plots").generic_string() << "\n";
  }
  return kExitOk;
}

void print_report(const MetricReport& report, const ConfusionMatrix& cm, std::ostream& out) {
  out << "n=" << report.n() << " tp=" << cm.tp() << " tn=" << cm.tn() << " fp=" << cm.fp()
      << " fn=" << cm.fn() << " beta=" << format_value(report.beta()) << "\n";
  out << std::left << std::setw(14) << "metric" << std::setw(20) << "value" << "defined\n";
  for (MetricId id : kAllMetrics) {
    const MetricValue& v = report[id];
    out << std::left << std::setw(14) << metric_name(id) << std::setw(20) << format_value(v.value)
        << (v.defined ? "yes" : "no") << "\n";
  }
}

int cmd_score(const std::string& input, double beta, std::ostream& out) {
  if (!(beta > 0.0)) throw UsageError("--beta must be positive");
  const LabelPair labels = read_labels_csv(fs::path(input));
  const ConfusionMatrix cm = tally(labels.y_true, labels.y_pred);
  print_report(compute_all(cm, beta), cm, out);
  return kExitOk;
}

int cmd_rank(const std::vector<std::string>& inputs, std::ostream& out) {
  std::vector<std::pair<std::string, ConfusionMatrix>> models;
  for (const std::string& input : inputs) {
    const LabelPair labels = read_labels_csv(fs::path(input));
    models.emplace_back(fs::path(input).stem().string(), tally(labels.y_true, labels.y_pred));
  }
  const auto ranked = rank_models(models);
  out << std::left << std::setw(6) << "rank" << std::setw(24) << "model" << std::setw(20) << "f1"
      << "g_mean\n";
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const auto it = std::find_if(models.begin(), models.end(),
                                 [&](const auto& m) { return m.first == ranked[i]; });
    const CompositeScore score = composite_score(it->second);
    out << std::left << std::setw(6) << i + 1 << std::setw(24) << ranked[i] << std::setw(20)
        << format_value(score.f1) << format_value(score.g_mean) << "\n";
  }
  return kExitOk;
}

int cmd_plot(const std::string& sweep, const std::string& dir, std::ostream& out) {
  const SweepResult result = read_sweep_csv(fs::path(sweep));
  const auto files = emit_plots(result, fs::path(dir));
  out << "wrote " << files.size() << " SVG files to " << fs::path(dir).generic_string() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluation-metric test bench for imbalanced binary classification", "imlab"};
  app.require_subcommand(1, 1);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run the imbalance x error grid and write sweep.csv");
  auto* n_opt = sweep_cmd->add_option("--n", sweep.n, "Instances per grid point")->capture_default_str();
  auto* seed_opt = sweep_cmd->add_option("--seed", sweep.seed, "Base seed")->capture_default_str();
  auto* minority_opt = sweep_cmd->add_option("--minority", sweep.minority, "Comma-separated minority fractions")
                           ->delimiter(',');
  auto* errors_opt = sweep_cmd->add_option("--errors", sweep.errors, "Error grid START:STOP:STEP");
  sweep_cmd->add_option("--mode", sweep.mode, "both | minority-only | all")
      ->check(CLI::IsMember({"both", "minority-only", "all"}))
      ->capture_default_str();
  sweep_cmd->add_option("--beta", sweep.beta, "Beta for the F-beta entry")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "Output directory")->required();
  sweep_cmd->add_flag("--paper-defaults", sweep.paper_defaults,
                      "N=10000, seed 1234567890, fractions 0.5..0.0001, error step 1000/N")
      ->excludes(n_opt)
      ->excludes(seed_opt)
      ->excludes(minority_opt)
      ->excludes(errors_opt);
  sweep_cmd->add_flag("--plots", sweep.plots, "Also write SVG plots under OUT/plots");

  std::string score_input;
  double score_beta = 1.0;
  auto* score_cmd = app.add_subcommand("score", "Score a y_true,y_pred label file");
  score_cmd->add_option("--input", score_input, "Label CSV")->required();
  score_cmd->add_option("--beta", score_beta, "Beta for the F-beta entry")->capture_default_str();

  std::vector<std::string> rank_inputs;
  auto* rank_cmd = app.add_subcommand("rank", "Rank label files by composite F1 then g-mean");
  rank_cmd->add_option("--inputs", rank_inputs, "Label CSV files")->required();

  std::string plot_sweep, plot_out;
  auto* plot_cmd = app.add_subcommand("plot", "Regenerate SVG plots from a stored sweep.csv");
  plot_cmd->add_option("--sweep", plot_sweep, "Sweep CSV")->required();
  plot_cmd->add_option("--out", plot_out, "Output directory")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*sweep_cmd) return cmd_sweep(sweep, out);
    if (*score_cmd) return cmd_score(score_input, score_beta, out);
    if (*rank_cmd) return cmd_rank(rank_inputs, out);
    if (*plot_cmd) return cmd_plot(plot_sweep, plot_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace imlab
