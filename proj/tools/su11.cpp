/**
 * Copyright 2026 The su11 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end: parameter sweeps, figure data, single-point
// sensitivity and visibility, and the oracle validation suite.
//
// Exit codes: 0 success, 1 usage error, 2 validation failure, 3 per-point
// errors present.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "su11/closed_form.hpp"
#include "su11/config_io.hpp"
#include "su11/figures.hpp"
#include "su11/metrics.hpp"
#include "su11/output.hpp"
#include "su11/sweep.hpp"
#include "su11/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitPointErrors = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Config file plus per-key flag overrides shared by the sweep-like commands.
struct SpecOptions {
  std::string config_path;
  std::map<std::string, std::string> overrides;
  bool axis_total = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "flat key = value config file")->check(CLI::ExistingFile);
    for (const auto& key : su11::config_keys()) {
      if (key == "axis_total") continue;
      cmd->add_option_function<std::string>(
          "--" + key, [this, key](const std::string& v) { overrides[key] = v; }, "override config key " + key);
    }
    cmd->add_flag("--axis-total", axis_total, "swept transmission is the total, not extra, transmission");
  }

  su11::SweepSpec build() const {
    su11::SweepSpec spec = config_path.empty() ? su11::SweepSpec{} : su11::load_config(config_path);
    for (const auto& key : su11::config_keys()) {
      if (const auto it = overrides.find(key); it != overrides.end()) su11::apply_setting(spec, key, it->second);
    }
    if (axis_total) spec.axis_total = true;
    return spec;
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  return out;
}

int emit(const su11::OutputHeader& header, const std::vector<su11::SeriesResult>& series, const std::string& out,
         const std::string& json) {
  if (out.empty() || out == "-") {
    su11::write_csv(std::cout, header, series);
  } else {
    auto f = open_out(out);
    su11::write_csv(f, header, series);
  }
  if (!json.empty()) {
    auto f = open_out(json);
    su11::write_json(f, header, series);
  }
  return su11::has_errors(series) ? kExitPointErrors : kExitOk;
}

int run_sweep_cmd(const SpecOptions& opts, const std::string& out, const std::string& json, int threads) {
  su11::SweepSpec spec = opts.build();
  try {
    spec.validate();
  } catch (const su11::DomainError& e) {
    throw UsageError(e.what());
  }
  std::vector<su11::SeriesResult> series{{"sweep", spec, su11::run_sweep(spec, threads)}};
  su11::OutputHeader header;
  header.command = "sweep";
  return emit(header, series, out, json);
}

int run_figure_cmd(const std::string& name, const std::string& out_dir, bool json, bool axis_total,
                   const std::string& convention, int steps, int threads) {
  su11::Figure fig;
  su11::FigureOptions opts;
  try {
    fig = su11::parse_figure(name);
    if (!convention.empty()) opts.snl_convention = su11::metrics::parse_convention(convention);
  } catch (const su11::DomainError& e) {
    throw UsageError(e.what());
  }
  opts.axis_total = axis_total;
  opts.steps = steps;
  const auto series = su11::run_figure(fig, opts, threads);

  std::filesystem::create_directories(out_dir);
  const std::filesystem::path dir(out_dir);
  const std::string stem = su11::to_string(fig);
  su11::OutputHeader header;
  header.command = "figure " + stem;
  {
    auto f = open_out((dir / (stem + ".csv")).string());
    su11::write_csv(f, header, series);
  }
  {
    auto f = open_out((dir / (stem + ".gp")).string());
    f << su11::plot_script(fig, series, stem + ".csv");
  }
  if (json) {
    auto f = open_out((dir / (stem + ".json")).string());
    su11::write_json(f, header, series);
  }
  std::cout << (dir / (stem + ".csv")).string() << '\n';
  return su11::has_errors(series) ? kExitPointErrors : kExitOk;
}

void print_kv(const std::string& key, const std::string& value) { std::cout << key << " = " << value << '\n'; }

int run_sensitivity_cmd(const SpecOptions& opts, bool at_theta) {
  const su11::SweepSpec spec = opts.build();
  const auto& cfg = spec.fixed;
  try {
    cfg.validate();
  } catch (const su11::DomainError& e) {
    throw UsageError(e.what());
  }
  try {
    const auto r = at_theta
                       ? su11::metrics::make_report(cfg, cfg.theta, su11::metrics::sensitivity(cfg, cfg.theta),
                                                    spec.snl_convention)
                       : su11::metrics::optimal_sensitivity(cfg, spec.snl_convention);
    print_kv("theta0", su11::format_number(r.theta_opt));
    print_kv("dtheta2", su11::format_number(r.dtheta2));
    print_kv("dtheta2_shotnoise", su11::format_number(r.dtheta2_shotnoise));
    print_kv("db_vs_shotnoise", su11::format_number(r.db_vs_shotnoise));
    print_kv("snl_convention", su11::metrics::to_string(r.snl_convention));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPointErrors;
  }
  return kExitOk;
}

int run_visibility_cmd(const SpecOptions& opts) {
  const auto cfg = opts.build().fixed;
  try {
    cfg.validate();
  } catch (const su11::DomainError& e) {
    throw UsageError(e.what());
  }
  try {
    print_kv("visibility", su11::format_number(su11::closed_form::visibility(cfg)));
    print_kv("visibility_numeric", su11::format_number(su11::metrics::visibility_numeric(cfg)));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPointErrors;
  }
  return kExitOk;
}

int run_validate_cmd(std::uint64_t seed, int points, bool force_singular, int threads) {
  su11::ValidationReport report;
  try {
    report = su11::validate(seed, points, force_singular, threads);
  } catch (const su11::DomainError& e) {
    throw UsageError(e.what());
  }
  std::cout << su11::format_report(report);
  return report.passed() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"su11: lossy, seeded SU(1,1) interferometer simulator"};
  app.set_version_flag("--version", su11::tool_version());
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = SU11_THREADS or all cores)")->check(CLI::NonNegativeNumber);

  SpecOptions sweep_opts;
  std::string sweep_out, sweep_json;
  auto* sweep = app.add_subcommand("sweep", "one-dimensional parameter sweep");
  sweep_opts.attach(sweep);
  sweep->add_option("--out", sweep_out, "CSV destination (default stdout)");
  sweep->add_option("--json", sweep_json, "JSON mirror destination");

  std::string fig_name, fig_dir = ".", fig_convention;
  bool fig_json = false, fig_total = false;
  int fig_steps = 100;
  auto* figure = app.add_subcommand("figure", "preconfigured figure data plus a gnuplot script");
  figure->add_option("name", fig_name, "fig2a, fig2b, fig3a, fig3b, fig4a or fig4b")->required();
  figure->add_option("--out-dir", fig_dir, "output directory");
  figure->add_flag("--json", fig_json, "also write a JSON mirror");
  figure->add_flag("--axis-total", fig_total, "swept transmission is the total transmission");
  figure->add_option("--snl_convention", fig_convention, "after_opa1 or after_loss");
  figure->add_option("--steps", fig_steps, "points per curve")->check(CLI::Range(2, 1'000'000));

  SpecOptions sens_opts;
  bool at_theta = false;
  auto* sens = app.add_subcommand("sensitivity", "optimal phase sensitivity of one configuration");
  sens_opts.attach(sens);
  sens->add_flag("--at-theta", at_theta, "evaluate at the configured theta instead of optimizing");

  SpecOptions vis_opts;
  auto* vis = app.add_subcommand("visibility", "fringe visibility of one configuration");
  vis_opts.attach(vis);

  std::uint64_t seed = 42;
  int points = 100;
  bool force_singular = false;
  auto* val = app.add_subcommand("validate", "closed form, Gaussian and Fock agreement suite");
  val->add_option("--seed", seed, "grid seed");
  val->add_option("--points", points, "grid size (0..10000)");
  val->add_flag("--force-singular", force_singular, "make the first point a zero-gain singular point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*sweep) return run_sweep_cmd(sweep_opts, sweep_out, sweep_json, threads);
    if (*figure) return run_figure_cmd(fig_name, fig_dir, fig_json, fig_total, fig_convention, fig_steps, threads);
    if (*sens) return run_sensitivity_cmd(sens_opts, at_theta);
    if (*vis) return run_visibility_cmd(vis_opts);
    if (*val) return run_validate_cmd(seed, points, force_singular, threads);
  } catch (const su11::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPointErrors;
  }
  return kExitUsage;
}
