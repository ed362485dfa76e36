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

#ifndef FCLA_VALIDATE_H_
#define FCLA_VALIDATE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "fcla/pattern.h"

namespace fcla {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// (1 / 4pi) times the integral of PowerGain over the sphere, by the
// composite midpoint rule on a steps x (2 steps) grid in (theta, phi).
double PatternSphereAverage(const PatternSpec& spec, int steps = 720);

struct OracleStudy {
  int evaluated = 0;
  int infeasible = 0;  // a solver returned a placement violating spacing
  int violations = 0;  // a solver objective below the oracle optimum
  double median_gap_joint = 0.0;
  double median_gap_alternating = 0.0;
};

// Tiny random instances (M, N <= 2, G_H, G_V <= 4) solved by both greedy
// solvers and by exhaustive search, seeded base_seed, base_seed + 1, ...
// Gaps are (greedy - oracle) / oracle.
OracleStudy RunOracleStudy(int instances, std::uint64_t base_seed);

// Self-checks shipped with the library:
//   pattern-quadrature  directional power averages to 1 for kappa 1..3
//   rzf-limit           Gram-form identity, ZF and MRT limits
//   oracle-equivalence  greedy solvers never beat exhaustive search
std::vector<SuiteResult> RunValidationSuites();

}  // namespace fcla

#endif  // FCLA_VALIDATE_H_
