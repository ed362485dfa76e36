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

#ifndef FCLA_SOLUTION_H_
#define FCLA_SOLUTION_H_

#include <vector>

#include "fcla/channel.h"
#include "fcla/linalg.h"

namespace fcla {

enum class Phase { kJoint, kAngle, kHeight };

// One greedy selection step. For the angle phase `group` is the ring, for
// the height phase `selected` is the height slot and `group` the ring.
struct IterationRecord {
  Phase phase = Phase::kJoint;
  int outer = 0;       // alternating outer iteration, 1-based; 0 for joint
  int step = 0;        // 1-based within the phase
  int selected = 0;    // dictionary column or slot index
  int group = 0;
  double objective = 0.0;  // ||I - H*F*||_F^2 + alpha ||F*||_F^2 after RLS
};

struct PlacementSolution {
  std::vector<int> height_slots;               // per ring
  std::vector<std::vector<int>> angle_slots;   // per ring, ascending
  std::vector<double> heights;                 // per ring, meters
  std::vector<std::vector<double>> angles;     // per ring, radians
  Placement placement;                         // ring-major, MN entries
  CMatrix channel;                             // K x MN
  CMatrix precoder;                            // MN x K, columns normalized
  std::vector<IterationRecord> trace;
  std::vector<double> outer_sum_rates;         // alternating solver only
  int iterations = 0;                          // greedy selections made

  // Rebuilds `placement` from `heights` and `angles`.
  void FlattenPlacement();
};

}  // namespace fcla

#endif  // FCLA_SOLUTION_H_
