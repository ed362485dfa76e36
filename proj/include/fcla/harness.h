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

#ifndef FCLA_HARNESS_H_
#define FCLA_HARNESS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcla/channel.h"
#include "fcla/geometry.h"
#include "fcla/joint_solver.h"
#include "fcla/precoding.h"
#include "fcla/solution.h"

namespace fcla {

enum class Method { kUcla, kJoint, kAlternating };
enum class SweepVariable { kSnr, kGrid, kIterations };
enum class AlphaRule { kMmse, kFixed };

const char* MethodName(Method method);          // "ucla", "fcla-j", "fcla-a"
const char* SweepVariableName(SweepVariable v);  // "snr_db", "grid", "iterations"
Method ParseMethod(const std::string& name);
SweepVariable ParseSweepVariable(const std::string& name);

// Everything needed to reproduce a Monte Carlo experiment. The sweep
// variable overrides the matching scalar (snr_db, grid or iterations) at
// each sweep point.
struct ExperimentSpec {
  int rings = 4;     // M
  int per_ring = 4;  // N
  int users = 16;    // K
  int paths = 4;     // L
  double carrier_hz = 3e9;
  double noise_power = 1.0;  // sigma^2
  PatternSpec pattern = PatternSpec::Directional(1.0);
  std::optional<double> min_spacing;  // d_min; defaults to 3 lambda / 8
  int grid = 12;                      // G_H = G_V
  double snr_db = 0.0;
  int iterations = 5;  // I for the alternating solver
  SweepVariable sweep = SweepVariable::kSnr;
  std::vector<double> sweep_values = {0.0};
  int trials = 200;
  std::uint64_t seed = 1;
  AlphaRule alpha_rule = AlphaRule::kMmse;
  double alpha = 1.0;  // used when alpha_rule == kFixed
  std::vector<Method> methods = {Method::kUcla, Method::kJoint,
                                 Method::kAlternating};
  MatchNorm match_norm = MatchNorm::kSquaredL2;
  int jobs = 0;  // worker threads; 0 = hardware concurrency

  double wavelength() const;
  double spacing() const;
  // kMmse gives alpha = sigma^2.
  double regularization() const;
  void Validate() const;
};

struct SweepPoint {
  double value = 0.0;
  double snr_db = 0.0;
  int grid = 0;
  int iterations = 0;

  double power(double noise_power) const;  // P = 10^(SNR/10) sigma^2
};

SweepPoint PointAt(const ExperimentSpec& spec, std::size_t index);
FclaConfig ConfigFor(const ExperimentSpec& spec, const SweepPoint& point);

// Uniform cylindrical array on the same radius: N angles 2 pi n / N per
// ring, rings at heights 0, d_min, ..., (M - 1) d_min.
Placement UclaPlacement(const FclaConfig& config);

struct BaselineResult {
  ChannelMatrix channel;
  CMatrix precoder;  // normalized
  RateReport rates;
};

BaselineResult UclaBaseline(std::span<const PathSet> users,
                            const FclaConfig& config, double alpha,
                            double power, double noise_power);

// Runs one method on one channel realization. UCLA returns its fixed
// placement with the RZF precoder.
PlacementSolution RunMethod(Method method, std::span<const PathSet> users,
                            const FclaConfig& config, const PositionGrid& grid,
                            const ExperimentSpec& spec,
                            const SweepPoint& point);

std::uint64_t TrialSeed(std::uint64_t base_seed, std::size_t point_index,
                        std::size_t trial);

struct TrialResult {
  std::vector<double> sum_rates;  // parallel to spec.methods
};

// Draws the channel for (point, trial) and runs every requested method on
// it. Rates are evaluated on the channel synthesized at each method's
// returned placement.
TrialResult RunTrial(const ExperimentSpec& spec, std::size_t point_index,
                     std::size_t trial);

struct ResultRow {
  Method method = Method::kUcla;
  SweepVariable sweep = SweepVariable::kSnr;
  double sweep_value = 0.0;
  double mean_sum_rate = 0.0;
  double std_error = 0.0;
  int trials = 0;
};

struct TrialFailure {
  std::size_t point = 0;
  std::size_t trial = 0;
  std::string message;
};

struct ResultTable {
  std::vector<ResultRow> rows;  // point-major, then spec.methods order
  std::vector<TrialFailure> failures;

  const ResultRow* Find(Method method, double sweep_value) const;
};

ResultTable RunSweep(const ExperimentSpec& spec);

// CSV with header
// method,sweep_var,sweep_value,mean_sum_rate_bits,stderr,trials
std::string ResultTableCsv(const ResultTable& table);

std::string SpecToJson(const ExperimentSpec& spec);
// Merges the keys of `json_text` over `base`. Accepts a plain spec object or
// a run manifest (whose "experiment" member is used). Unknown keys throw.
ExperimentSpec SpecFromJson(const std::string& json_text,
                            const ExperimentSpec& base = {});
std::string ManifestJson(const ExperimentSpec& spec);

const char* CodeVersion();

}  // namespace fcla

#endif  // FCLA_HARNESS_H_
