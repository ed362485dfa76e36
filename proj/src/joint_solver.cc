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

#include "fcla/joint_solver.h"

#include <algorithm>
#include <string>
#include <vector>

#include "fcla/error.h"
#include "fcla/precoding.h"

namespace fcla {
namespace {

double MatchGain(const CMatrix& atoms, const CMatrix& residual, int column,
                 MatchNorm norm) {
  const Eigen::RowVectorXcd filtered =
      atoms.col(column).adjoint() * residual;
  if (norm == MatchNorm::kL1) return filtered.cwiseAbs().sum();
  return filtered.squaredNorm();
}

CMatrix GatherColumns(const CMatrix& atoms, const std::vector<int>& columns) {
  CMatrix out(atoms.rows(), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    out.col(static_cast<Eigen::Index>(j)) = atoms.col(columns[j]);
  }
  return out;
}

}  // namespace

int MatchAtom(const CMatrix& atoms, const CMatrix& residual,
              std::span<const int> candidates, MatchNorm norm) {
  Require(!candidates.empty(), ErrorCode::kInvalidArgument,
          "MatchAtom: empty candidate set");
  int best = candidates.front();
  double best_gain = MatchGain(atoms, residual, best, norm);
  for (int g : candidates.subspan(1)) {
    const double gain = MatchGain(atoms, residual, g, norm);
    if (gain > best_gain) {
      best_gain = gain;
      best = g;
    }
  }
  return best;
}

PlacementSolution SolveJoint(const Dictionary& dictionary, int rings,
                             int per_ring, const JointOptions& options) {
  Require(rings >= 1 && per_ring >= 1, ErrorCode::kInvalidArgument,
          "SolveJoint: M and N must be >= 1");
  const int group_size = dictionary.group_size;
  const int groups = dictionary.num_groups();
  const int total = dictionary.num_atoms();
  if (groups < rings || group_size < per_ring) {
    Fail(ErrorCode::kInfeasibleGrid,
         "joint dictionary has " + std::to_string(groups) + "x" +
             std::to_string(group_size) + " slots, need " +
             std::to_string(rings) + "x" + std::to_string(per_ring));
  }
  const Eigen::Index users = dictionary.entries.rows();
  const CMatrix identity = CMatrix::Identity(users, users);

  std::vector<bool> live(total, true);
  std::vector<int> group_counts(groups, 0);
  std::vector<int> completed;
  std::vector<int> support;
  std::vector<int> candidates;
  CMatrix residual = identity;
  PlacementSolution solution;

  for (int step = 1; step <= total; ++step) {
    candidates.clear();
    for (int g = 0; g < total; ++g) {
      if (live[g]) candidates.push_back(g);
    }
    if (candidates.empty()) {
      Fail(ErrorCode::kInfeasibleGrid,
           "candidate set exhausted before all groups completed");
    }
    const int chosen = MatchAtom(dictionary.entries, residual, candidates,
                                 options.match_norm);
    support.push_back(chosen);
    live[chosen] = false;

    const CMatrix selected = GatherColumns(dictionary.entries, support);
    const CMatrix coefficients = Rzf(selected, options.alpha);
    residual = identity - selected * coefficients;

    const int group = dictionary.atoms[chosen].group;
    if (++group_counts[group] == per_ring) {
      completed.push_back(group);
      for (int member = 0; member < group_size; ++member) {
        live[dictionary.ColumnOf(group, member)] = false;
      }
    }
    solution.trace.push_back(
        {Phase::kJoint, 0, step, chosen, group,
         RzfObjective(selected, coefficients, options.alpha)});
    solution.iterations = step;
    if (static_cast<int>(completed.size()) == rings) break;
  }
  if (static_cast<int>(completed.size()) != rings) {
    Fail(ErrorCode::kInternal, "joint solver stopped without M groups");
  }

  // Keep only atoms of completed groups, ordered by height slot then angle.
  std::sort(completed.begin(), completed.end());
  std::vector<int> final_support;
  for (int g : support) {
    if (std::binary_search(completed.begin(), completed.end(),
                           dictionary.atoms[g].group)) {
      final_support.push_back(g);
    }
  }
  std::sort(final_support.begin(), final_support.end());

  solution.height_slots = completed;
  solution.angle_slots.assign(rings, {});
  solution.heights.assign(rings, 0.0);
  solution.angles.assign(rings, {});
  for (int g : final_support) {
    const Atom& atom = dictionary.atoms[g];
    const auto ring = static_cast<std::size_t>(
        std::lower_bound(completed.begin(), completed.end(), atom.group) -
        completed.begin());
    solution.heights[ring] = atom.height;
    solution.angle_slots[ring].push_back(atom.member);
    solution.angles[ring].push_back(atom.angle);
  }
  solution.FlattenPlacement();
  solution.channel = GatherColumns(dictionary.entries, final_support);
  solution.precoder = NormalizeServedColumns(
      Rzf(solution.channel, options.alpha, GramForm::kUserSide),
      options.power);
  return solution;
}

}  // namespace fcla
