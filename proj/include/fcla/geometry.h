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

#ifndef FCLA_GEOMETRY_H_
#define FCLA_GEOMETRY_H_

#include <array>
#include <vector>

#include "fcla/pattern.h"

namespace fcla {

// Geometry of a flexible cylindrical array: `rings` circular tracks stacked
// on the z axis, each carrying `per_ring` antennas that revolve on a circle of
// `radius`. Ring heights live in [0, height_extent).
struct FclaConfig {
  int rings = 4;                  // M
  int per_ring = 4;               // N
  double radius = 0.1;            // R, meters
  double height_extent = 0.6;     // Z, meters
  double min_spacing = 0.05;      // d_min, meters
  double wavelength = 0.1;        // lambda, meters
  PatternSpec pattern = PatternSpec::Directional(1.0);

  int num_antennas() const { return rings * per_ring; }
  double wavenumber() const;

  // Checks the scalar invariants and d_min <= 2R. Slot-count feasibility is
  // checked by BuildGrid.
  void Validate() const;
};

// Minimum revolving angle between two elements of one ring so that their
// chord is at least d_min: 2 asin(d_min / 2R).
double MinRevolveAngle(double min_spacing, double radius);

// Number of angle slots floor(2 pi / psi_min) and height slots
// floor(Z / d_min). A 1e-9 slack absorbs rounding when R and Z were derived
// from slot counts.
int AngleSlotCount(const FclaConfig& config);
int HeightSlotCount(const FclaConfig& config);

struct PositionGrid {
  std::vector<double> angles;   // psi_g = g * 2pi / G_H
  std::vector<double> heights;  // z_g = g * d_min
  double radius = 0.0;
  double min_spacing = 0.0;
  double min_angle = 0.0;

  int num_angles() const { return static_cast<int>(angles.size()); }
  int num_heights() const { return static_cast<int>(heights.size()); }
  double angle_step() const;
};

// Throws kInfeasibleGrid when G_V < M or G_H < N.
PositionGrid BuildGrid(const FclaConfig& config);

// Returns `config` with R = d_min / (2 sin(pi / G_H)) and Z = G_V d_min so
// that BuildGrid yields exactly the requested slot counts.
FclaConfig WithSlotCounts(FclaConfig config, int angle_slots,
                          int height_slots);

std::array<double, 3> PositionOf(double psi, double z, double radius);

}  // namespace fcla

#endif  // FCLA_GEOMETRY_H_
