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

#include "fcla/oracle.h"

#include <limits>
#include <string>

#include "fcla/error.h"
#include "fcla/precoding.h"

namespace fcla {
namespace {

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    // Exact: out * (n - k + i) is divisible by i at every step.
    const std::uint64_t next = SaturatingMul(out, n - k + i);
    if (next == std::numeric_limits<std::uint64_t>::max()) return next;
    out = next / i;
  }
  return out;
}

// All ascending k-subsets of {0, ..., n-1} in lexicographic order.
double SumRateOf(const CMatrix& channel, const CMatrix& precoder,
                 const OracleOptions& options) {
  return EvaluateRates(channel, NormalizeServedColumns(precoder, options.power),
                       options.noise_power)
      .sum_rate;
}

std::vector<std::vector<int>> Subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(k);
  for (int i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[i] == n - k + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::uint64_t FeasiblePlacementCount(int height_slots, int angle_slots,
                                     int rings, int per_ring) {
  std::uint64_t count = Binomial(height_slots, rings);
  const std::uint64_t per = Binomial(angle_slots, per_ring);
  for (int m = 0; m < rings; ++m) count = SaturatingMul(count, per);
  return count;
}

OracleResult ExhaustiveBest(std::span<const PathSet> users,
                            const PositionGrid& grid, const FclaConfig& config,
                            const OracleOptions& options) {
  const int rings = config.rings;
  const int per_ring = config.per_ring;
  const std::uint64_t count = FeasiblePlacementCount(
      grid.num_heights(), grid.num_angles(), rings, per_ring);
  Require(count > 0, ErrorCode::kInfeasibleGrid,
          "oracle: no feasible placement on this grid");
  if (count > options.cap) {
    Fail(ErrorCode::kCapExceeded,
         "oracle enumeration needs " + std::to_string(count) +
             " placements, cap is " + std::to_string(options.cap));
  }

  const Dictionary dict = BuildJointDictionary(users, grid, config);
  const auto height_sets = Subsets(grid.num_heights(), rings);
  const auto angle_sets = Subsets(grid.num_angles(), per_ring);
  const Eigen::Index num_users = dict.entries.rows();

  OracleResult best;
  bool have_best = false;
  double best_score = 0.0;
  CMatrix channel(num_users, rings * per_ring);
  std::vector<std::size_t> choice(rings);

  for (const auto& heights : height_sets) {
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      for (int m = 0; m < rings; ++m) {
        const auto& angles = angle_sets[choice[m]];
        for (int n = 0; n < per_ring; ++n) {
          channel.col(m * per_ring + n) =
              dict.entries.col(dict.ColumnOf(heights[m], angles[n]));
        }
      }
      const CMatrix precoder = Rzf(channel, options.alpha);
      const double objective = RzfObjective(channel, precoder, options.alpha);
      double score = objective;
      double sum_rate = 0.0;
      if (options.criterion == OracleCriterion::kSumRate) {
        sum_rate = SumRateOf(channel, precoder, options);
        score = -sum_rate;
      }
      ++best.evaluated;
      if (!have_best || score < best_score) {
        have_best = true;
        best_score = score;
        best.objective = objective;
        best.sum_rate = options.criterion == OracleCriterion::kSumRate
                            ? sum_rate
                            : SumRateOf(channel, precoder, options);
        best.height_slots = heights;
        best.angle_slots.assign(rings, {});
        for (int m = 0; m < rings; ++m) {
          best.angle_slots[m] = angle_sets[choice[m]];
        }
      }
      // Odometer over per-ring angle subsets.
      int m = rings - 1;
      while (m >= 0 && ++choice[m] == angle_sets.size()) {
        choice[m] = 0;
        --m;
      }
      if (m < 0) break;
    }
  }
  return best;
}

}  // namespace fcla
