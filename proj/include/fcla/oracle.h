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

#ifndef FCLA_ORACLE_H_
#define FCLA_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "fcla/channel.h"
#include "fcla/geometry.h"

namespace fcla {

enum class OracleCriterion { kObjective, kSumRate };

struct OracleOptions {
  double alpha = 1.0;
  OracleCriterion criterion = OracleCriterion::kObjective;
  double power = 1.0;        // used by kSumRate and the reported sum rate
  double noise_power = 1.0;
  std::uint64_t cap = 1'000'000;
};

struct OracleResult {
  std::vector<int> height_slots;              // per ring, ascending
  std::vector<std::vector<int>> angle_slots;  // per ring, ascending
  double objective = 0.0;  // regularized objective at the RZF minimizer
  double sum_rate = 0.0;   // with normalized RZF precoding
  std::uint64_t evaluated = 0;
};

// C(G_V, M) * C(G_H, N)^M, saturating at UINT64_MAX.
std::uint64_t FeasiblePlacementCount(int height_slots, int angle_slots,
                                     int rings, int per_ring);

// Exhaustive search over every feasible grid placement: an unordered set of
// M height slots and, per ring, an unordered set of N angle slots. Throws
// kCapExceeded when the count exceeds options.cap.
OracleResult ExhaustiveBest(std::span<const PathSet> users,
                            const PositionGrid& grid, const FclaConfig& config,
                            const OracleOptions& options);

}  // namespace fcla

#endif  // FCLA_ORACLE_H_
