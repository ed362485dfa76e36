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

#include "fcla/fcla.h"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "fcla/error.h"
#include "fcla/harness.h"
#include "fcla/validate.h"

struct fcla_experiment {
  fcla::ExperimentSpec spec;
};

struct fcla_results {
  fcla::ResultTable table;
};

namespace {

thread_local std::string last_error;

fcla_status ToStatus(fcla::ErrorCode code) {
  switch (code) {
    case fcla::ErrorCode::kInvalidArgument:
      return FCLA_ERR_INVALID_ARGUMENT;
    case fcla::ErrorCode::kInfeasibleGrid:
      return FCLA_ERR_INFEASIBLE_GRID;
    case fcla::ErrorCode::kSingularSystem:
      return FCLA_ERR_SINGULAR;
    case fcla::ErrorCode::kCapExceeded:
      return FCLA_ERR_CAP_EXCEEDED;
    case fcla::ErrorCode::kIo:
      return FCLA_ERR_IO;
    case fcla::ErrorCode::kInternal:
      return FCLA_ERR_INTERNAL;
  }
  return FCLA_ERR_INTERNAL;
}

template <typename Fn>
fcla_status Guard(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return FCLA_OK;
  } catch (const fcla::Error& e) {
    last_error = e.what();
    return ToStatus(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return FCLA_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return FCLA_ERR_INTERNAL;
  }
}

void NotNull(const void* p, const char* what) {
  if (p == nullptr) {
    fcla::Fail(fcla::ErrorCode::kInvalidArgument,
               std::string(what) + " must not be NULL");
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fcla::Fail(fcla::ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fcla::Fail(fcla::ErrorCode::kIo, "cannot write " + path.string());
  out << text;
  if (!out) fcla::Fail(fcla::ErrorCode::kIo, "write failed: " + path.string());
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const char* PhaseName(fcla::Phase phase) {
  switch (phase) {
    case fcla::Phase::kJoint:
      return "joint";
    case fcla::Phase::kAngle:
      return "angle";
    case fcla::Phase::kHeight:
      return "height";
  }
  return "unknown";
}

}  // namespace

extern "C" {

const char* fcla_version(void) { return fcla::CodeVersion(); }

const char* fcla_last_error(void) { return last_error.c_str(); }

const char* fcla_status_string(fcla_status status) {
  switch (status) {
    case FCLA_OK:
      return "ok";
    case FCLA_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case FCLA_ERR_INFEASIBLE_GRID:
      return "infeasible grid";
    case FCLA_ERR_SINGULAR:
      return "singular system";
    case FCLA_ERR_CAP_EXCEEDED:
      return "enumeration cap exceeded";
    case FCLA_ERR_IO:
      return "i/o error";
    case FCLA_ERR_INTERNAL:
      return "internal error";
    case FCLA_ERR_VALIDATION_FAILED:
      return "validation failed";
  }
  return "unknown status";
}

void fcla_string_free(char* text) { std::free(text); }

fcla_status fcla_experiment_create(fcla_experiment** out) {
  return Guard([&] {
    NotNull(out, "out");
    *out = new fcla_experiment();
  });
}

void fcla_experiment_destroy(fcla_experiment* experiment) {
  delete experiment;
}

fcla_status fcla_experiment_merge_json(fcla_experiment* experiment,
                                       const char* json) {
  return Guard([&] {
    NotNull(experiment, "experiment");
    NotNull(json, "json");
    experiment->spec = fcla::SpecFromJson(json, experiment->spec);
  });
}

fcla_status fcla_experiment_load_file(fcla_experiment* experiment,
                                      const char* path) {
  return Guard([&] {
    NotNull(experiment, "experiment");
    NotNull(path, "path");
    experiment->spec = fcla::SpecFromJson(ReadFile(path), experiment->spec);
  });
}

fcla_status fcla_experiment_to_json(const fcla_experiment* experiment,
                                    char** out_json) {
  return Guard([&] {
    NotNull(experiment, "experiment");
    NotNull(out_json, "out_json");
    *out_json = CopyString(fcla::SpecToJson(experiment->spec));
  });
}

fcla_status fcla_experiment_validate(const fcla_experiment* experiment) {
  return Guard([&] {
    NotNull(experiment, "experiment");
    experiment->spec.Validate();
  });
}

fcla_status fcla_experiment_write_manifest(const fcla_experiment* experiment,
                                           const char* path) {
  return Guard([&] {
    NotNull(experiment, "experiment");
    NotNull(path, "path");
    WriteFile(path, fcla::ManifestJson(experiment->spec) + "\n");
  });
}

fcla_status fcla_run_sweep(const fcla_experiment* experiment,
                           fcla_results** out) {
  return Guard([&] {
    NotNull(experiment, "experiment");
    NotNull(out, "out");
    auto results = std::make_unique<fcla_results>();
    results->table = fcla::RunSweep(experiment->spec);
    *out = results.release();
  });
}

void fcla_results_destroy(fcla_results* results) { delete results; }

size_t fcla_results_row_count(const fcla_results* results) {
  return results == nullptr ? 0 : results->table.rows.size();
}

fcla_status fcla_results_row(const fcla_results* results, size_t index,
                             fcla_result_row* out) {
  return Guard([&] {
    NotNull(results, "results");
    NotNull(out, "out");
    if (index >= results->table.rows.size()) {
      fcla::Fail(fcla::ErrorCode::kInvalidArgument, "row index out of range");
    }
    const fcla::ResultRow& row = results->table.rows[index];
    out->method = fcla::MethodName(row.method);
    out->sweep_var = fcla::SweepVariableName(row.sweep);
    out->sweep_value = row.sweep_value;
    out->mean_sum_rate = row.mean_sum_rate;
    out->std_error = row.std_error;
    out->trials = row.trials;
  });
}

size_t fcla_results_failure_count(const fcla_results* results) {
  return results == nullptr ? 0 : results->table.failures.size();
}

const char* fcla_results_failure_message(const fcla_results* results,
                                         size_t index) {
  if (results == nullptr || index >= results->table.failures.size()) {
    return nullptr;
  }
  return results->table.failures[index].message.c_str();
}

fcla_status fcla_results_write_csv(const fcla_results* results,
                                   const char* path) {
  return Guard([&] {
    NotNull(results, "results");
    NotNull(path, "path");
    WriteFile(path, fcla::ResultTableCsv(results->table));
  });
}

fcla_status fcla_solve_once(const fcla_experiment* experiment,
                            const char* method, const char* out_dir,
                            fcla_solve_summary* out) {
  return Guard([&] {
    NotNull(experiment, "experiment");
    NotNull(method, "method");
    NotNull(out_dir, "out_dir");
    const fcla::ExperimentSpec& spec = experiment->spec;
    spec.Validate();
    const fcla::Method which = fcla::ParseMethod(method);
    const std::filesystem::path dir(out_dir);
    if (!std::filesystem::is_directory(dir)) {
      fcla::Fail(fcla::ErrorCode::kIo, "not a directory: " + dir.string());
    }

    const fcla::SweepPoint point = fcla::PointAt(spec, 0);
    const fcla::FclaConfig config = fcla::ConfigFor(spec, point);
    const fcla::PositionGrid grid = fcla::BuildGrid(config);
    const auto users = fcla::DrawPaths(spec.users, spec.paths,
                                       fcla::TrialSeed(spec.seed, 0, 0));
    const fcla::PlacementSolution solution =
        fcla::RunMethod(which, users, config, grid, spec, point);
    const auto channel =
        fcla::SynthesizeChannel(users, solution.placement, config);
    const auto rates = fcla::EvaluateRates(channel.entries, solution.precoder,
                                           spec.noise_power);

    WriteFile(dir / "paths.json", fcla::PathsToJson(users) + "\n");
    std::string placement = "ring,antenna,angle_rad,height_m\n";
    for (std::size_t m = 0; m < solution.angles.size(); ++m) {
      for (std::size_t n = 0; n < solution.angles[m].size(); ++n) {
        placement += std::to_string(m) + ',' + std::to_string(n) + ',' +
                     Num(solution.angles[m][n]) + ',' +
                     Num(solution.heights[m]) + '\n';
      }
    }
    WriteFile(dir / ("placement_" + std::string(method) + ".csv"), placement);

    if (which == fcla::Method::kJoint) {
      std::string trace = "iter,selected_g,group,objective\n";
      for (const auto& rec : solution.trace) {
        trace += std::to_string(rec.step) + ',' +
                 std::to_string(rec.selected) + ',' +
                 std::to_string(rec.group) + ',' + Num(rec.objective) + '\n';
      }
      WriteFile(dir / "trace_fcla-j.csv", trace);
    } else if (which == fcla::Method::kAlternating) {
      std::string trace = "outer,phase,step,selected,ring,objective\n";
      for (const auto& rec : solution.trace) {
        trace += std::to_string(rec.outer) + ',' + PhaseName(rec.phase) +
                 ',' + std::to_string(rec.step) + ',' +
                 std::to_string(rec.selected) + ',' +
                 std::to_string(rec.group) + ',' + Num(rec.objective) + '\n';
      }
      WriteFile(dir / "trace_fcla-a.csv", trace);
      std::string convergence = "i,sum_rate\n";
      for (std::size_t i = 0; i < solution.outer_sum_rates.size(); ++i) {
        convergence += std::to_string(i + 1) + ',' +
                       Num(solution.outer_sum_rates[i]) + '\n';
      }
      WriteFile(dir / "convergence_fcla-a.csv", convergence);
    }

    if (out != nullptr) {
      out->sum_rate = rates.sum_rate;
      out->iterations = solution.iterations;
      out->antennas = static_cast<int>(solution.placement.size());
    }
  });
}

fcla_status fcla_validate(fcla_suite_callback callback, void* user_data) {
  bool all_passed = true;
  const fcla_status status = Guard([&] {
    for (const fcla::SuiteResult& suite : fcla::RunValidationSuites()) {
      all_passed = all_passed && suite.passed;
      if (callback != nullptr) {
        callback(suite.name.c_str(), suite.passed ? 1 : 0,
                 suite.detail.c_str(), user_data);
      }
    }
  });
  if (status != FCLA_OK) return status;
  if (!all_passed) {
    last_error = "one or more validation suites failed";
    return FCLA_ERR_VALIDATION_FAILED;
  }
  return FCLA_OK;
}

}  // extern "C"
