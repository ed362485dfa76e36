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

#ifndef FCLA_JOINT_SOLVER_H_
#define FCLA_JOINT_SOLVER_H_

#include <span>

#include "fcla/channel.h"
#include "fcla/solution.h"

namespace fcla {

// Matching gain of an atom against the residual: ||d^H R||_2^2 or
// ||d^H R||_1.
enum class MatchNorm { kSquaredL2, kL1 };

// Returns the candidate column maximizing the matching gain of
// atoms.col(g)^H * residual. `candidates` must be ascending; ties resolve to
// the lowest index. Throws kInvalidArgument on an empty candidate list.
int MatchAtom(const CMatrix& atoms, const CMatrix& residual,
              std::span<const int> candidates,
              MatchNorm norm = MatchNorm::kSquaredL2);

struct JointOptions {
  double alpha = 1.0;
  double power = 1.0;  // P, for the final column normalization
  MatchNorm match_norm = MatchNorm::kSquaredL2;
};

// Group-sparse OMP with regularized least squares over the joint (psi, z)
// dictionary. Atoms are selected one at a time until `rings` height groups
// hold `per_ring` atoms each; atoms picked in groups that never completed
// are discarded before the final precoder is formed.
PlacementSolution SolveJoint(const Dictionary& dictionary, int rings,
                             int per_ring, const JointOptions& options);

}  // namespace fcla

#endif  // FCLA_JOINT_SOLVER_H_
