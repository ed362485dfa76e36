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

#include "fcla/harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numbers>
#include <optional>
#include <thread>

#include "fcla/alternating_solver.h"
#include "fcla/error.h"

namespace fcla {
namespace {

constexpr double kSpeedOfLight = 299'792'458.0;
// d_min = 3 lambda / 8 unless configured.
constexpr double kDefaultSpacingWavelengths = 0.375;

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

const char* MethodName(Method method) {
  switch (method) {
    case Method::kUcla:
      return "ucla";
    case Method::kJoint:
      return "fcla-j";
    case Method::kAlternating:
      return "fcla-a";
  }
  return "unknown";
}

const char* SweepVariableName(SweepVariable v) {
  switch (v) {
    case SweepVariable::kSnr:
      return "snr_db";
    case SweepVariable::kGrid:
      return "grid";
    case SweepVariable::kIterations:
      return "iterations";
  }
  return "unknown";
}

Method ParseMethod(const std::string& name) {
  for (Method m : {Method::kUcla, Method::kJoint, Method::kAlternating}) {
    if (name == MethodName(m)) return m;
  }
  Fail(ErrorCode::kInvalidArgument,
       "unknown method '" + name + "' (expected ucla, fcla-j or fcla-a)");
}

SweepVariable ParseSweepVariable(const std::string& name) {
  for (SweepVariable v : {SweepVariable::kSnr, SweepVariable::kGrid,
                          SweepVariable::kIterations}) {
    if (name == SweepVariableName(v)) return v;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown sweep variable '" + name + "'");
}

double ExperimentSpec::wavelength() const { return kSpeedOfLight / carrier_hz; }

double ExperimentSpec::spacing() const {
  return min_spacing.value_or(kDefaultSpacingWavelengths * wavelength());
}

double ExperimentSpec::regularization() const {
  return alpha_rule == AlphaRule::kMmse ? noise_power : alpha;
}

void ExperimentSpec::Validate() const {
  Require(rings >= 1 && per_ring >= 1 && users >= 1 && paths >= 1,
          ErrorCode::kInvalidArgument, "M, N, K and L must all be >= 1");
  Require(carrier_hz > 0 && std::isfinite(carrier_hz),
          ErrorCode::kInvalidArgument, "carrier frequency must be positive");
  Require(noise_power > 0 && std::isfinite(noise_power),
          ErrorCode::kInvalidArgument, "noise power must be positive");
  Require(!min_spacing || *min_spacing > 0, ErrorCode::kInvalidArgument,
          "min_spacing must be positive");
  Require(trials >= 1, ErrorCode::kInvalidArgument, "trials must be >= 1");
  Require(iterations >= 1, ErrorCode::kInvalidArgument,
          "iterations must be >= 1");
  Require(!sweep_values.empty(), ErrorCode::kInvalidArgument,
          "sweep needs at least one value");
  Require(!methods.empty(), ErrorCode::kInvalidArgument,
          "at least one method is required");
  Require(alpha_rule == AlphaRule::kMmse || alpha >= 0.0,
          ErrorCode::kInvalidArgument, "fixed alpha must be >= 0");
  Require(jobs >= 0, ErrorCode::kInvalidArgument, "jobs must be >= 0");
  pattern.Validate();
  for (double v : sweep_values) {
    Require(std::isfinite(v), ErrorCode::kInvalidArgument,
            "sweep values must be finite");
    if (sweep != SweepVariable::kSnr) {
      Require(v == std::floor(v) && v >= 1, ErrorCode::kInvalidArgument,
              "grid and iteration sweep values must be positive integers");
    }
  }
  for (std::size_t i = 0; i < sweep_values.size(); ++i) {
    ConfigFor(*this, PointAt(*this, i)).Validate();
    BuildGrid(ConfigFor(*this, PointAt(*this, i)));
  }
}

double SweepPoint::power(double noise_power) const {
  return std::pow(10.0, snr_db / 10.0) * noise_power;
}

SweepPoint PointAt(const ExperimentSpec& spec, std::size_t index) {
  Require(index < spec.sweep_values.size(), ErrorCode::kInvalidArgument,
          "sweep point index out of range");
  SweepPoint point;
  point.value = spec.sweep_values[index];
  point.snr_db = spec.snr_db;
  point.grid = spec.grid;
  point.iterations = spec.iterations;
  switch (spec.sweep) {
    case SweepVariable::kSnr:
      point.snr_db = point.value;
      break;
    case SweepVariable::kGrid:
      point.grid = static_cast<int>(point.value);
      break;
    case SweepVariable::kIterations:
      point.iterations = static_cast<int>(point.value);
      break;
  }
  return point;
}

FclaConfig ConfigFor(const ExperimentSpec& spec, const SweepPoint& point) {
  FclaConfig config;
  config.rings = spec.rings;
  config.per_ring = spec.per_ring;
  config.min_spacing = spec.spacing();
  config.wavelength = spec.wavelength();
  config.pattern = spec.pattern;
  return WithSlotCounts(config, point.grid, point.grid);
}

Placement UclaPlacement(const FclaConfig& config) {
  Placement placement;
  for (int m = 0; m < config.rings; ++m) {
    for (int n = 0; n < config.per_ring; ++n) {
      placement.push_back(
          {2.0 * std::numbers::pi * n / config.per_ring,
           m * config.min_spacing});
    }
  }
  return placement;
}

BaselineResult UclaBaseline(std::span<const PathSet> users,
                            const FclaConfig& config, double alpha,
                            double power, double noise_power) {
  BaselineResult out;
  out.channel = SynthesizeChannel(users, UclaPlacement(config), config);
  out.precoder = NormalizeServedColumns(Rzf(out.channel.entries, alpha), power);
  out.rates = EvaluateRates(out.channel.entries, out.precoder, noise_power);
  return out;
}

PlacementSolution RunMethod(Method method, std::span<const PathSet> users,
                            const FclaConfig& config, const PositionGrid& grid,
                            const ExperimentSpec& spec,
                            const SweepPoint& point) {
  const double alpha = spec.regularization();
  const double power = point.power(spec.noise_power);
  switch (method) {
    case Method::kUcla: {
      BaselineResult base =
          UclaBaseline(users, config, alpha, power, spec.noise_power);
      PlacementSolution solution;
      for (int m = 0; m < config.rings; ++m) {
        solution.heights.push_back(m * config.min_spacing);
        solution.angles.emplace_back();
        for (int n = 0; n < config.per_ring; ++n) {
          solution.angles.back().push_back(
              base.channel.column_positions[m * config.per_ring + n].angle);
        }
      }
      solution.placement = std::move(base.channel.column_positions);
      solution.channel = std::move(base.channel.entries);
      solution.precoder = std::move(base.precoder);
      return solution;
    }
    case Method::kJoint: {
      const Dictionary dict = BuildJointDictionary(users, grid, config);
      return SolveJoint(dict, config.rings, config.per_ring,
                        {alpha, power, spec.match_norm});
    }
    case Method::kAlternating: {
      AlternatingOptions options;
      options.alpha = alpha;
      options.outer_iterations = point.iterations;
      options.power = power;
      options.noise_power = spec.noise_power;
      return SolveAlternating(users, grid, config, options);
    }
  }
  Fail(ErrorCode::kInternal, "unknown method");
}

std::uint64_t TrialSeed(std::uint64_t base_seed, std::size_t point_index,
                        std::size_t trial) {
  std::uint64_t h = SplitMix64(base_seed);
  h = SplitMix64(h ^ static_cast<std::uint64_t>(point_index));
  h = SplitMix64(h ^ static_cast<std::uint64_t>(trial));
  return h;
}

TrialResult RunTrial(const ExperimentSpec& spec, std::size_t point_index,
                     std::size_t trial) {
  const SweepPoint point = PointAt(spec, point_index);
  const FclaConfig config = ConfigFor(spec, point);
  const PositionGrid grid = BuildGrid(config);
  const std::vector<PathSet> users = DrawPaths(
      spec.users, spec.paths, TrialSeed(spec.seed, point_index, trial));
  TrialResult result;
  for (Method method : spec.methods) {
    const PlacementSolution solution =
        RunMethod(method, users, config, grid, spec, point);
    const ChannelMatrix channel =
        SynthesizeChannel(users, solution.placement, config);
    result.sum_rates.push_back(
        EvaluateRates(channel.entries, solution.precoder, spec.noise_power)
            .sum_rate);
  }
  return result;
}

const ResultRow* ResultTable::Find(Method method, double sweep_value) const {
  for (const ResultRow& row : rows) {
    if (row.method == method && row.sweep_value == sweep_value) return &row;
  }
  return nullptr;
}

ResultTable RunSweep(const ExperimentSpec& spec) {
  spec.Validate();
  const std::size_t points = spec.sweep_values.size();
  const std::size_t trials = static_cast<std::size_t>(spec.trials);
  const std::size_t total = points * trials;
  std::vector<std::optional<TrialResult>> outcomes(total);
  std::vector<std::string> errors(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t item = next++; item < total; item = next++) {
      try {
        outcomes[item] = RunTrial(spec, item / trials, item % trials);
      } catch (const std::exception& e) {
        errors[item] = e.what();
      }
    }
  };
  unsigned workers = spec.jobs > 0 ? static_cast<unsigned>(spec.jobs)
                                   : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1,
                                 static_cast<unsigned>(std::max<std::size_t>(
                                     total, 1)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  // Ordered reduction; independent of scheduling.
  ResultTable table;
  for (std::size_t p = 0; p < points; ++p) {
    for (std::size_t i = 0; i < spec.methods.size(); ++i) {
      double sum = 0.0;
      double sum_sq = 0.0;
      int count = 0;
      for (std::size_t t = 0; t < trials; ++t) {
        const auto& outcome = outcomes[p * trials + t];
        if (!outcome) continue;
        const double v = outcome->sum_rates[i];
        sum += v;
        sum_sq += v * v;
        ++count;
      }
      ResultRow row;
      row.method = spec.methods[i];
      row.sweep = spec.sweep;
      row.sweep_value = spec.sweep_values[p];
      row.trials = count;
      if (count > 0) {
        row.mean_sum_rate = sum / count;
        if (count > 1) {
          const double var =
              std::max(0.0, (sum_sq - count * row.mean_sum_rate *
                                          row.mean_sum_rate) /
                                (count - 1));
          row.std_error = std::sqrt(var / count);
        }
      }
      table.rows.push_back(row);
    }
    for (std::size_t t = 0; t < trials; ++t) {
      if (!errors[p * trials + t].empty()) {
        table.failures.push_back({p, t, errors[p * trials + t]});
      }
    }
  }
  return table;
}

std::string ResultTableCsv(const ResultTable& table) {
  std::string out =
      "method,sweep_var,sweep_value,mean_sum_rate_bits,stderr,trials\n";
  for (const ResultRow& row : table.rows) {
    out += MethodName(row.method);
    out += ',';
    out += SweepVariableName(row.sweep);
    out += ',' + FormatDouble(row.sweep_value) + ',' +
           FormatDouble(row.mean_sum_rate) + ',' +
           FormatDouble(row.std_error) + ',' + std::to_string(row.trials) +
           '\n';
  }
  return out;
}

const char* CodeVersion() { return "0.1.0"; }

}  // namespace fcla
