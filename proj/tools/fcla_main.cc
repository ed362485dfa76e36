// Copyright 2026 The FCLA Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// fcla: command-line front end over the C API in fcla/fcla.h.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fcla/fcla.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string config;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials, jobs, rings, per_ring, users, paths, grid,
      iterations;
  std::optional<double> carrier_hz, noise_power, kappa, alpha, min_spacing,
      snr_db;
  bool omni = false;
  std::vector<std::string> methods;
  std::string match_norm;
  std::string sweep;   // range expression for the swept variable
  std::string method = "fcla-a";  // solve-once
};

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "a:step:b", a comma list "a,b,c" or a single value.
std::vector<double> ParseRange(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(std::stod(item));
    if (parts.size() != 3 || parts[1] == 0.0 ||
        (parts[2] - parts[0]) / parts[1] < 0) {
      throw CliError("range must be start:step:stop, got '" + text + "'");
    }
    const auto count =
        static_cast<long>(std::floor((parts[2] - parts[0]) / parts[1] + 1e-9));
    for (long i = 0; i <= count; ++i) out.push_back(parts[0] + i * parts[1]);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  }
  if (out.empty()) throw CliError("empty value list '" + text + "'");
  return out;
}

void Check(fcla_status status) {
  if (status != FCLA_OK) {
    throw CliError(std::string(fcla_status_string(status)) + ": " +
                   fcla_last_error());
  }
}

std::string DefaultOutDir() {
  const char* env = std::getenv("FCLA_OUTPUT_DIR");
  return env != nullptr && *env != '\0' ? env : "fcla_out";
}

bool ConfigHasSweepValues(const std::string& path) {
  if (path.empty()) return false;
  std::ifstream in(path);
  if (!in) return false;
  try {
    json doc = json::parse(in);
    if (doc.contains("experiment")) doc = doc["experiment"];
    return doc.contains("sweep_values");
  } catch (const json::exception&) {
    return false;  // the library reports the parse error
  }
}

// Flag overrides as a JSON object; only flags given on the command line.
json Overrides(const Options& o) {
  json j = json::object();
  if (o.seed) j["seed"] = *o.seed;
  if (o.trials) j["trials"] = *o.trials;
  if (o.jobs) j["jobs"] = *o.jobs;
  if (o.rings) j["rings"] = *o.rings;
  if (o.per_ring) j["per_ring"] = *o.per_ring;
  if (o.users) j["users"] = *o.users;
  if (o.paths) j["paths"] = *o.paths;
  if (o.grid) j["grid"] = *o.grid;
  if (o.iterations) j["iterations"] = *o.iterations;
  if (o.carrier_hz) j["carrier_hz"] = *o.carrier_hz;
  if (o.noise_power) j["noise_power"] = *o.noise_power;
  if (o.snr_db) j["snr_db"] = *o.snr_db;
  if (o.min_spacing) j["min_spacing"] = *o.min_spacing;
  if (o.omni) j["pattern"] = "omni";
  if (o.kappa) {
    j["pattern"] = "directional";
    j["kappa"] = *o.kappa;
  }
  if (o.alpha) {
    j["alpha_rule"] = "fixed";
    j["alpha"] = *o.alpha;
  }
  if (!o.methods.empty()) j["methods"] = o.methods;
  if (!o.match_norm.empty()) j["match_norm"] = o.match_norm;
  return j;
}

struct Experiment {
  fcla_experiment* handle = nullptr;
  Experiment() { Check(fcla_experiment_create(&handle)); }
  ~Experiment() { fcla_experiment_destroy(handle); }
  Experiment(const Experiment&) = delete;
  Experiment& operator=(const Experiment&) = delete;
};

// Builds the experiment: defaults, then config file, then the subcommand's
// sweep, then flags.
void Configure(Experiment& e, const Options& o, const char* sweep_var,
               const std::string& default_sweep) {
  if (!o.config.empty()) Check(fcla_experiment_load_file(e.handle, o.config.c_str()));
  json sweep = json::object();
  if (sweep_var != nullptr) {
    sweep["sweep_var"] = sweep_var;
    if (!o.sweep.empty()) {
      sweep["sweep_values"] = ParseRange(o.sweep);
    } else if (!ConfigHasSweepValues(o.config)) {
      sweep["sweep_values"] = ParseRange(default_sweep);
    }
  }
  Check(fcla_experiment_merge_json(e.handle, sweep.dump().c_str()));
  Check(fcla_experiment_merge_json(e.handle, Overrides(o).dump().c_str()));
  Check(fcla_experiment_validate(e.handle));
}

std::filesystem::path PrepareOutDir(const Options& o) {
  std::filesystem::path dir(o.out_dir.empty() ? DefaultOutDir() : o.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw CliError("cannot create " + dir.string() + ": " + ec.message());
  return dir;
}

int RunSweepCommand(const Options& o, const char* sweep_var,
                    const std::string& default_sweep) {
  Experiment e;
  Configure(e, o, sweep_var, default_sweep);
  const auto dir = PrepareOutDir(o);
  Check(fcla_experiment_write_manifest(e.handle,
                                       (dir / "manifest.json").c_str()));

  fcla_results* results = nullptr;
  Check(fcla_run_sweep(e.handle, &results));
  std::unique_ptr<fcla_results, decltype(&fcla_results_destroy)> guard(
      results, fcla_results_destroy);
  Check(fcla_results_write_csv(results, (dir / "results.csv").c_str()));

  std::printf("%-8s %12s %14s %10s %7s\n", "method", sweep_var, "sum_rate",
              "stderr", "trials");
  for (size_t i = 0; i < fcla_results_row_count(results); ++i) {
    fcla_result_row row;
    Check(fcla_results_row(results, i, &row));
    std::printf("%-8s %12g %14.4f %10.4f %7d\n", row.method, row.sweep_value,
                row.mean_sum_rate, row.std_error, row.trials);
  }
  const size_t failures = fcla_results_failure_count(results);
  for (size_t i = 0; i < failures; ++i) {
    std::fprintf(stderr, "trial failure: %s\n",
                 fcla_results_failure_message(results, i));
  }
  std::printf("wrote %s and %s\n", (dir / "results.csv").c_str(),
              (dir / "manifest.json").c_str());
  return 0;
}

int RunSolveOnce(const Options& o) {
  Experiment e;
  Configure(e, o, nullptr, "");
  const auto dir = PrepareOutDir(o);
  Check(fcla_experiment_write_manifest(e.handle,
                                       (dir / "manifest.json").c_str()));
  fcla_solve_summary summary{};
  Check(fcla_solve_once(e.handle, o.method.c_str(), dir.c_str(), &summary));
  std::printf("method %s: sum rate %.6f bits/channel use, %d antennas, "
              "%d greedy selections\n",
              o.method.c_str(), summary.sum_rate, summary.antennas,
              summary.iterations);
  std::printf("outputs in %s\n", dir.c_str());
  return 0;
}

void ReportSuite(const char* name, int passed, const char* detail, void*) {
  std::printf("[%s] %s: %s\n", passed ? "PASS" : "FAIL", name, detail);
}

int RunValidate() {
  const fcla_status status = fcla_validate(ReportSuite, nullptr);
  if (status == FCLA_ERR_VALIDATION_FAILED) return 1;
  Check(status);
  std::printf("all suites passed\n");
  return 0;
}

void AddCommon(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "JSON experiment or run manifest");
  cmd->add_option("--out", o.out_dir,
                  "output directory (default $FCLA_OUTPUT_DIR or fcla_out)");
  cmd->add_option("--seed", o.seed, "base seed");
  cmd->add_option("--trials", o.trials, "Monte Carlo trials per point");
  cmd->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
  cmd->add_option("--rings,-M", o.rings, "rings M");
  cmd->add_option("--per-ring,-N", o.per_ring, "antennas per ring N");
  cmd->add_option("--users,-K", o.users, "users K");
  cmd->add_option("--paths,-L", o.paths, "paths per user L");
  cmd->add_option("--freq", o.carrier_hz, "carrier frequency in Hz");
  cmd->add_option("--sigma2", o.noise_power, "noise power");
  cmd->add_option("--kappa", o.kappa, "directional pattern sharpness (>= 1)");
  cmd->add_flag("--omni", o.omni, "omni-directional elements");
  cmd->add_option("--alpha", o.alpha,
                  "fixed RZF regularization (default alpha = sigma^2)");
  cmd->add_option("--dmin", o.min_spacing, "minimum spacing d_min in meters");
  cmd->add_option("--methods", o.methods, "subset of ucla fcla-j fcla-a")
      ->delimiter(',');
  cmd->add_option("--match-norm", o.match_norm, "l2sq (default) or l1");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flexible cylindrical array precoding and placement"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(fcla_version()));
  Options o;

  auto* snr = app.add_subcommand("sweep-snr", "sum rate versus SNR");
  AddCommon(snr, o);
  snr->add_option("--snr", o.sweep, "SNR list in dB (default -6:2:6)");
  snr->add_option("--grid", o.grid, "G = G_H = G_V");
  snr->add_option("--iters", o.iterations, "outer iterations I for fcla-a");

  auto* grid = app.add_subcommand("sweep-grid", "sum rate versus G");
  AddCommon(grid, o);
  grid->add_option("--grid", o.sweep, "G list (default 4:2:12)");
  grid->add_option("--snr", o.snr_db, "SNR in dB");
  grid->add_option("--iters", o.iterations, "outer iterations I for fcla-a");

  auto* iters = app.add_subcommand("sweep-iters", "sum rate versus I");
  AddCommon(iters, o);
  iters->add_option("--iters", o.sweep, "I list (default 1:1:10)");
  iters->add_option("--snr", o.snr_db, "SNR in dB");
  iters->add_option("--grid", o.grid, "G = G_H = G_V");

  auto* once = app.add_subcommand("solve-once",
                                  "one trial with iteration traces");
  AddCommon(once, o);
  once->add_option("--method", o.method, "ucla, fcla-j or fcla-a")
      ->check(CLI::IsMember({"ucla", "fcla-j", "fcla-a"}));
  once->add_option("--snr", o.snr_db, "SNR in dB");
  once->add_option("--grid", o.grid, "G = G_H = G_V");
  once->add_option("--iters", o.iterations, "outer iterations I for fcla-a");

  auto* validate =
      app.add_subcommand("validate", "run the numerical self-check suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*snr) return RunSweepCommand(o, "snr_db", "-6:2:6");
    if (*grid) return RunSweepCommand(o, "grid", "4:2:12");
    if (*iters) return RunSweepCommand(o, "iterations", "1:1:10");
    if (*once) return RunSolveOnce(o);
    if (*validate) return RunValidate();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "fcla: %s\n", e.what());
    return 1;
  }
  return 0;
}
