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

#ifndef FCLA_ALTERNATING_SOLVER_H_
#define FCLA_ALTERNATING_SOLVER_H_

#include <span>
#include <vector>

#include "fcla/channel.h"
#include "fcla/geometry.h"
#include "fcla/solution.h"

namespace fcla {

struct AnglePhaseResult {
  std::vector<std::vector<int>> angle_slots;  // per ring, ascending
  std::vector<std::vector<int>> selections;   // [n][m] slot picked by ring m
  CMatrix channel;                            // K x nM, selection order
  CMatrix precoder;                           // RLS, unnormalized
  std::vector<double> objectives;             // after each inner iteration n
};

// Revolving-angle phase at fixed ring heights. For n = 1..N every ring picks
// its best live angle against the shared residual, then one joint RLS and
// residual update follow.
AnglePhaseResult OptimizeAngles(std::span<const PathSet> users,
                                std::span<const double> heights,
                                const PositionGrid& grid,
                                const FclaConfig& config, double alpha);

struct HeightPhaseResult {
  std::vector<int> height_slots;  // per ring
  CMatrix channel;                // K x MN, ring-major
  CMatrix precoder;               // RLS, unnormalized
  std::vector<double> objectives;  // after each ring m
};

// Height phase at fixed per-ring angles. Rings pick one N-column block each,
// in order m = 1..M, with an RLS and residual update after every ring. A
// chosen height slot is unavailable to later rings.
HeightPhaseResult OptimizeHeights(
    std::span<const PathSet> users,
    const std::vector<std::vector<double>>& ring_angles,
    const PositionGrid& grid, const FclaConfig& config, double alpha);

struct AlternatingOptions {
  double alpha = 1.0;
  int outer_iterations = 5;  // I
  double power = 1.0;        // P
  double noise_power = 1.0;  // sigma^2, for the per-iteration sum rate
  double early_stop_tol = 0.0;  // relative sum-rate change; 0 disables
};

// Initial height slot of ring m (0-based): round(m (G_V - 1) / max(M - 1, 1)).
std::vector<int> InitialHeightSlots(int rings, int height_slots);

PlacementSolution SolveAlternating(std::span<const PathSet> users,
                                   const PositionGrid& grid,
                                   const FclaConfig& config,
                                   const AlternatingOptions& options);

}  // namespace fcla

#endif  // FCLA_ALTERNATING_SOLVER_H_
