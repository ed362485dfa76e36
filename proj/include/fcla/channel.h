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

#ifndef FCLA_CHANNEL_H_
#define FCLA_CHANNEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fcla/geometry.h"
#include "fcla/linalg.h"

namespace fcla {

// One far-field propagation path. The virtual angles are cached at
// construction: vx = sin(el) cos(az), vy = sin(el) sin(az), vz = cos(el).
struct Path {
  Complex gain;
  double elevation = 0.0;
  double azimuth = 0.0;
  double vx = 0.0;
  double vy = 0.0;
  double vz = 1.0;

  static Path Make(Complex gain, double elevation, double azimuth);
};

// The L paths of one user.
struct PathSet {
  std::vector<Path> paths;
};

// Draws K users with L paths each: elevation uniform on [pi/6, 5pi/6],
// azimuth uniform on [0, 2pi), gains i.i.d. CN(0, 1).
std::vector<PathSet> DrawPaths(int users, int paths_per_user,
                               std::uint64_t seed);

// Element position on the array: revolving angle and ring height.
struct AntennaPosition {
  double angle = 0.0;
  double height = 0.0;
};
using Placement = std::vector<AntennaPosition>;

// Entry k of the array-position manifold b(psi, z): the conjugated response
// of user k at one antenna position, summed over that user's paths.
Complex ApmEntry(const PathSet& user, double psi, double z,
                 const FclaConfig& config);

// Column b(psi, z) for all users.
CVector ApmColumn(std::span<const PathSet> users, double psi, double z,
                  const FclaConfig& config);

// Antennas at the same height form a ring. Within a ring the circular angle
// gap must be >= psi_min; antennas at distinct heights must be >= d_min
// apart vertically. Throws kInfeasibleGrid on the first violation.
void CheckPlacement(const Placement& placement, const FclaConfig& config);

struct ChannelMatrix {
  CMatrix entries;  // K x MN, row k = h_k^H
  Placement column_positions;
};

ChannelMatrix SynthesizeChannel(std::span<const PathSet> users,
                                const Placement& placement,
                                const FclaConfig& config);

// Dictionary atoms are laid out group-major: column = group * group_size +
// member.
struct Atom {
  int group = 0;
  int member = 0;
  double angle = 0.0;
  double height = 0.0;
};

struct Dictionary {
  CMatrix entries;  // K x G
  std::vector<Atom> atoms;
  int group_size = 0;

  int num_atoms() const { return static_cast<int>(atoms.size()); }
  int num_groups() const {
    return group_size == 0 ? 0 : num_atoms() / group_size;
  }
  int ColumnOf(int group, int member) const {
    return group * group_size + member;
  }
};

// Joint (psi, z) dictionary: group = height slot, member = angle slot.
Dictionary BuildJointDictionary(std::span<const PathSet> users,
                                const PositionGrid& grid,
                                const FclaConfig& config);

// Angle dictionary at fixed ring heights: group = ring, member = angle slot.
Dictionary BuildAngleDictionary(std::span<const PathSet> users,
                                std::span<const double> heights,
                                const PositionGrid& grid,
                                const FclaConfig& config);

// Height dictionary at fixed per-ring angles: group = ring * G_V + height
// slot, member = antenna within the ring. Each group is one N-column block.
Dictionary BuildHeightDictionary(
    std::span<const PathSet> users,
    const std::vector<std::vector<double>>& ring_angles,
    const PositionGrid& grid, const FclaConfig& config);

// Path export as a JSON array of
// {user, path, beta_re, beta_im, theta_el, phi_az} records.
std::string PathsToJson(std::span<const PathSet> users);
std::vector<PathSet> PathsFromJson(const std::string& text);

}  // namespace fcla

#endif  // FCLA_CHANNEL_H_
