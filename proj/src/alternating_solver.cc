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

#include "fcla/alternating_solver.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "fcla/error.h"
#include "fcla/joint_solver.h"
#include "fcla/precoding.h"

namespace fcla {
namespace {

void AppendColumns(CMatrix& target, const CMatrix& block) {
  const Eigen::Index old_cols = target.cols();
  target.conservativeResize(block.rows(), old_cols + block.cols());
  target.rightCols(block.cols()) = block;
}

}  // namespace

AnglePhaseResult OptimizeAngles(std::span<const PathSet> users,
                                std::span<const double> heights,
                                const PositionGrid& grid,
                                const FclaConfig& config, double alpha) {
  const int rings = static_cast<int>(heights.size());
  const int per_ring = config.per_ring;
  const int slots = grid.num_angles();
  Require(rings >= 1, ErrorCode::kInvalidArgument, "angle phase: no rings");
  if (slots < per_ring) {
    Fail(ErrorCode::kInfeasibleGrid, "angle phase: G_H < N");
  }
  const Dictionary dict = BuildAngleDictionary(users, heights, grid, config);
  const Eigen::Index num_users = dict.entries.rows();
  const CMatrix identity = CMatrix::Identity(num_users, num_users);

  // Candidate columns per ring, ascending.
  std::vector<std::vector<int>> live(rings);
  for (int m = 0; m < rings; ++m) {
    for (int gh = 0; gh < slots; ++gh) live[m].push_back(dict.ColumnOf(m, gh));
  }

  AnglePhaseResult result;
  result.angle_slots.assign(rings, {});
  CMatrix residual = identity;
  CMatrix selected(num_users, 0);
  for (int n = 0; n < per_ring; ++n) {
    std::vector<int> picks(rings);
    for (int m = 0; m < rings; ++m) {
      picks[m] = MatchAtom(dict.entries, residual, live[m]);
    }
    for (int m = 0; m < rings; ++m) {
      std::erase(live[m], picks[m]);
      result.angle_slots[m].push_back(dict.atoms[picks[m]].member);
      AppendColumns(selected, dict.entries.col(picks[m]));
      picks[m] = dict.atoms[picks[m]].member;
    }
    result.selections.push_back(picks);
    result.precoder = Rzf(selected, alpha);
    residual = identity - selected * result.precoder;
    result.objectives.push_back(
        RzfObjective(selected, result.precoder, alpha));
  }
  for (auto& slots_of_ring : result.angle_slots) {
    std::sort(slots_of_ring.begin(), slots_of_ring.end());
  }
  result.channel = std::move(selected);
  return result;
}

HeightPhaseResult OptimizeHeights(
    std::span<const PathSet> users,
    const std::vector<std::vector<double>>& ring_angles,
    const PositionGrid& grid, const FclaConfig& config, double alpha) {
  const int rings = static_cast<int>(ring_angles.size());
  const int slots = grid.num_heights();
  if (slots < rings) {
    Fail(ErrorCode::kInfeasibleGrid, "height phase: G_V < M");
  }
  const Dictionary dict =
      BuildHeightDictionary(users, ring_angles, grid, config);
  const int per_ring = dict.group_size;
  const Eigen::Index num_users = dict.entries.rows();
  const CMatrix identity = CMatrix::Identity(num_users, num_users);

  std::vector<int> live(slots);
  for (int g = 0; g < slots; ++g) live[g] = g;

  HeightPhaseResult result;
  CMatrix residual = identity;
  CMatrix selected(num_users, 0);
  for (int m = 0; m < rings; ++m) {
    int best = live.front();
    double best_gain = -1.0;
    for (int gv : live) {
      const auto block =
          dict.entries.middleCols(dict.ColumnOf(m * slots + gv, 0), per_ring);
      const double gain = (block.adjoint() * residual).squaredNorm();
      if (gain > best_gain) {
        best_gain = gain;
        best = gv;
      }
    }
    std::erase(live, best);
    result.height_slots.push_back(best);
    AppendColumns(selected, dict.entries.middleCols(
                                dict.ColumnOf(m * slots + best, 0), per_ring));
    result.precoder = Rzf(selected, alpha);
    residual = identity - selected * result.precoder;
    result.objectives.push_back(
        RzfObjective(selected, result.precoder, alpha));
  }
  result.channel = std::move(selected);
  return result;
}

std::vector<int> InitialHeightSlots(int rings, int height_slots) {
  std::vector<int> out(rings);
  const int denom = std::max(rings - 1, 1);
  for (int m = 0; m < rings; ++m) {
    out[m] = static_cast<int>(
        std::lround(static_cast<double>(m) * (height_slots - 1) / denom));
  }
  return out;
}

PlacementSolution SolveAlternating(std::span<const PathSet> users,
                                   const PositionGrid& grid,
                                   const FclaConfig& config,
                                   const AlternatingOptions& options) {
  Require(options.outer_iterations >= 1, ErrorCode::kInvalidArgument,
          "alternating solver needs I >= 1");
  const int rings = config.rings;
  if (grid.num_heights() < rings || grid.num_angles() < config.per_ring) {
    Fail(ErrorCode::kInfeasibleGrid, "alternating solver: grid too small");
  }

  PlacementSolution solution;
  solution.height_slots = InitialHeightSlots(rings, grid.num_heights());
  HeightPhaseResult last_heights;
  for (int outer = 1; outer <= options.outer_iterations; ++outer) {
    std::vector<double> heights(rings);
    for (int m = 0; m < rings; ++m) {
      heights[m] = grid.heights[solution.height_slots[m]];
    }
    const AnglePhaseResult angle_phase =
        OptimizeAngles(users, heights, grid, config, options.alpha);
    for (std::size_t n = 0; n < angle_phase.selections.size(); ++n) {
      for (int m = 0; m < rings; ++m) {
        solution.trace.push_back({Phase::kAngle, outer,
                                  static_cast<int>(n) + 1,
                                  angle_phase.selections[n][m], m,
                                  angle_phase.objectives[n]});
      }
    }

    solution.angle_slots = angle_phase.angle_slots;
    solution.angles.assign(rings, {});
    for (int m = 0; m < rings; ++m) {
      for (int slot : solution.angle_slots[m]) {
        solution.angles[m].push_back(grid.angles[slot]);
      }
    }
    last_heights =
        OptimizeHeights(users, solution.angles, grid, config, options.alpha);
    for (int m = 0; m < rings; ++m) {
      solution.trace.push_back({Phase::kHeight, outer, m + 1,
                                last_heights.height_slots[m], m,
                                last_heights.objectives[m]});
    }
    solution.height_slots = last_heights.height_slots;
    solution.iterations += config.per_ring + rings;

    const CMatrix normalized =
        NormalizeServedColumns(last_heights.precoder, options.power);
    const double rate =
        EvaluateRates(last_heights.channel, normalized, options.noise_power)
            .sum_rate;
    const double previous = solution.outer_sum_rates.empty()
                                ? 0.0
                                : solution.outer_sum_rates.back();
    solution.outer_sum_rates.push_back(rate);
    if (options.early_stop_tol > 0.0 && outer > 1 &&
        std::abs(rate - previous) <=
            options.early_stop_tol * std::abs(previous)) {
      break;
    }
  }

  solution.heights.resize(rings);
  for (int m = 0; m < rings; ++m) {
    solution.heights[m] = grid.heights[solution.height_slots[m]];
  }
  solution.FlattenPlacement();
  solution.channel = last_heights.channel;
  solution.precoder = NormalizeServedColumns(last_heights.precoder, options.power);
  return solution;
}

}  // namespace fcla
