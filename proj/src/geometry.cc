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

#include "fcla/geometry.h"

#include <cmath>
#include <numbers>
#include <string>

#include "fcla/error.h"

namespace fcla {
namespace {

constexpr double kSlotSlack = 1e-9;

}  // namespace

double FclaConfig::wavenumber() const {
  return 2.0 * std::numbers::pi / wavelength;
}

void FclaConfig::Validate() const {
  Require(rings >= 1, ErrorCode::kInvalidArgument, "rings (M) must be >= 1");
  Require(per_ring >= 1, ErrorCode::kInvalidArgument,
          "antennas per ring (N) must be >= 1");
  Require(radius > 0 && std::isfinite(radius), ErrorCode::kInvalidArgument,
          "radius R must be positive");
  Require(height_extent > 0 && std::isfinite(height_extent),
          ErrorCode::kInvalidArgument, "vertical extent Z must be positive");
  Require(min_spacing > 0 && std::isfinite(min_spacing),
          ErrorCode::kInvalidArgument, "minimum spacing d_min must be positive");
  Require(wavelength > 0 && std::isfinite(wavelength),
          ErrorCode::kInvalidArgument, "wavelength must be positive");
  Require(min_spacing <= 2.0 * radius * (1.0 + kSlotSlack),
          ErrorCode::kInfeasibleGrid, "d_min exceeds the ring diameter 2R");
  pattern.Validate();
}

double MinRevolveAngle(double min_spacing, double radius) {
  Require(radius > 0 && min_spacing > 0, ErrorCode::kInvalidArgument,
          "MinRevolveAngle: d_min and R must be positive");
  double ratio = min_spacing / (2.0 * radius);
  if (ratio > 1.0 + kSlotSlack) {
    Fail(ErrorCode::kInfeasibleGrid, "d_min exceeds the ring diameter 2R");
  }
  ratio = std::min(ratio, 1.0);
  return 2.0 * std::asin(ratio);
}

int AngleSlotCount(const FclaConfig& config) {
  const double psi_min = MinRevolveAngle(config.min_spacing, config.radius);
  return static_cast<int>(
      std::floor(2.0 * std::numbers::pi / psi_min + kSlotSlack));
}

int HeightSlotCount(const FclaConfig& config) {
  return static_cast<int>(
      std::floor(config.height_extent / config.min_spacing + kSlotSlack));
}

double PositionGrid::angle_step() const {
  return angles.empty() ? 0.0 : 2.0 * std::numbers::pi / num_angles();
}

PositionGrid BuildGrid(const FclaConfig& config) {
  config.Validate();
  const int angle_slots = AngleSlotCount(config);
  const int height_slots = HeightSlotCount(config);
  if (height_slots < config.rings) {
    Fail(ErrorCode::kInfeasibleGrid,
         "only " + std::to_string(height_slots) + " height slots for " +
             std::to_string(config.rings) + " rings");
  }
  if (angle_slots < config.per_ring) {
    Fail(ErrorCode::kInfeasibleGrid,
         "only " + std::to_string(angle_slots) + " angle slots for " +
             std::to_string(config.per_ring) + " antennas per ring");
  }
  PositionGrid grid;
  grid.radius = config.radius;
  grid.min_spacing = config.min_spacing;
  grid.min_angle = MinRevolveAngle(config.min_spacing, config.radius);
  grid.angles.resize(angle_slots);
  for (int g = 0; g < angle_slots; ++g) {
    grid.angles[g] = g * (2.0 * std::numbers::pi / angle_slots);
  }
  grid.heights.resize(height_slots);
  for (int g = 0; g < height_slots; ++g) {
    grid.heights[g] = g * config.min_spacing;
  }
  return grid;
}

FclaConfig WithSlotCounts(FclaConfig config, int angle_slots,
                          int height_slots) {
  Require(angle_slots >= 2, ErrorCode::kInvalidArgument,
          "angle slot override must be >= 2");
  Require(height_slots >= 1, ErrorCode::kInvalidArgument,
          "height slot override must be >= 1");
  Require(config.min_spacing > 0, ErrorCode::kInvalidArgument,
          "minimum spacing d_min must be positive");
  config.radius =
      config.min_spacing / (2.0 * std::sin(std::numbers::pi / angle_slots));
  config.height_extent = height_slots * config.min_spacing;
  return config;
}

std::array<double, 3> PositionOf(double psi, double z, double radius) {
  return {radius * std::cos(psi), radius * std::sin(psi), z};
}

}  // namespace fcla
