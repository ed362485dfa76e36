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

#include "fcla/channel.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "fcla/error.h"
#include "fcla/pattern.h"
#include "json.hpp"

namespace fcla {
namespace {

constexpr double kSpacingSlack = 1e-9;

bool SameHeight(double a, double b, double d_min) {
  return std::abs(a - b) <= kSpacingSlack * std::max(1.0, d_min);
}

}  // namespace

Path Path::Make(Complex gain, double elevation, double azimuth) {
  Path p;
  p.gain = gain;
  p.elevation = elevation;
  p.azimuth = azimuth;
  p.vx = std::sin(elevation) * std::cos(azimuth);
  p.vy = std::sin(elevation) * std::sin(azimuth);
  p.vz = std::cos(elevation);
  return p;
}

std::vector<PathSet> DrawPaths(int users, int paths_per_user,
                               std::uint64_t seed) {
  Require(users >= 1, ErrorCode::kInvalidArgument, "K must be >= 1");
  Require(paths_per_user >= 1, ErrorCode::kInvalidArgument, "L must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> elevation(std::numbers::pi / 6,
                                                   5 * std::numbers::pi / 6);
  std::uniform_real_distribution<double> azimuth(0.0, 2 * std::numbers::pi);
  std::normal_distribution<double> gaussian(0.0, std::sqrt(0.5));

  std::vector<PathSet> out(users);
  for (auto& user : out) {
    user.paths.reserve(paths_per_user);
    for (int l = 0; l < paths_per_user; ++l) {
      const double el = elevation(rng);
      const double az = azimuth(rng);
      const double re = gaussian(rng);
      const double im = gaussian(rng);
      user.paths.push_back(Path::Make({re, im}, el, az));
    }
  }
  return out;
}

Complex ApmEntry(const PathSet& user, double psi, double z,
                 const FclaConfig& config) {
  const double k0 = config.wavenumber();
  const double rc = config.radius * std::cos(psi);
  const double rs = config.radius * std::sin(psi);
  Complex sum(0.0, 0.0);
  for (const Path& p : user.paths) {
    const double amp =
        Amplitude(config.pattern, p.elevation, p.azimuth, psi);
    if (amp == 0.0) continue;
    const double phase = -k0 * (rc * p.vx + rs * p.vy + z * p.vz);
    sum += std::conj(p.gain) * amp * std::polar(1.0, phase);
  }
  return sum / std::sqrt(static_cast<double>(user.paths.size()));
}

CVector ApmColumn(std::span<const PathSet> users, double psi, double z,
                  const FclaConfig& config) {
  CVector col(static_cast<Eigen::Index>(users.size()));
  for (std::size_t k = 0; k < users.size(); ++k) {
    col(static_cast<Eigen::Index>(k)) = ApmEntry(users[k], psi, z, config);
  }
  return col;
}

void CheckPlacement(const Placement& placement, const FclaConfig& config) {
  const double psi_min = MinRevolveAngle(config.min_spacing, config.radius);
  const double d_min = config.min_spacing;
  for (std::size_t i = 0; i < placement.size(); ++i) {
    for (std::size_t j = i + 1; j < placement.size(); ++j) {
      const auto& a = placement[i];
      const auto& b = placement[j];
      if (SameHeight(a.height, b.height, d_min)) {
        const double gap = std::abs(WrapAngle(a.angle - b.angle));
        if (gap < psi_min * (1.0 - kSpacingSlack)) {
          Fail(ErrorCode::kInfeasibleGrid,
               "antennas " + std::to_string(i) + " and " + std::to_string(j) +
                   " on one ring are closer than psi_min");
        }
      } else if (std::abs(a.height - b.height) <
                 d_min * (1.0 - kSpacingSlack)) {
        Fail(ErrorCode::kInfeasibleGrid,
             "antennas " + std::to_string(i) + " and " + std::to_string(j) +
                 " sit on rings closer than d_min");
      }
    }
  }
}

ChannelMatrix SynthesizeChannel(std::span<const PathSet> users,
                                const Placement& placement,
                                const FclaConfig& config) {
  CheckPlacement(placement, config);
  ChannelMatrix out;
  out.entries.resize(static_cast<Eigen::Index>(users.size()),
                     static_cast<Eigen::Index>(placement.size()));
  for (std::size_t j = 0; j < placement.size(); ++j) {
    out.entries.col(static_cast<Eigen::Index>(j)) =
        ApmColumn(users, placement[j].angle, placement[j].height, config);
  }
  out.column_positions = placement;
  return out;
}

Dictionary BuildJointDictionary(std::span<const PathSet> users,
                                const PositionGrid& grid,
                                const FclaConfig& config) {
  Dictionary dict;
  dict.group_size = grid.num_angles();
  const int total = grid.num_heights() * grid.num_angles();
  dict.entries.resize(static_cast<Eigen::Index>(users.size()), total);
  dict.atoms.reserve(total);
  for (int gv = 0; gv < grid.num_heights(); ++gv) {
    for (int gh = 0; gh < grid.num_angles(); ++gh) {
      const Atom atom{gv, gh, grid.angles[gh], grid.heights[gv]};
      dict.entries.col(dict.ColumnOf(gv, gh)) =
          ApmColumn(users, atom.angle, atom.height, config);
      dict.atoms.push_back(atom);
    }
  }
  return dict;
}

Dictionary BuildAngleDictionary(std::span<const PathSet> users,
                                std::span<const double> heights,
                                const PositionGrid& grid,
                                const FclaConfig& config) {
  for (std::size_t i = 0; i < heights.size(); ++i) {
    for (std::size_t j = i + 1; j < heights.size(); ++j) {
      if (std::abs(heights[i] - heights[j]) <
          grid.min_spacing * (1.0 - kSpacingSlack)) {
        Fail(ErrorCode::kInvalidArgument,
             "angle dictionary: ring heights closer than d_min");
      }
    }
  }
  Dictionary dict;
  dict.group_size = grid.num_angles();
  const int rings = static_cast<int>(heights.size());
  dict.entries.resize(static_cast<Eigen::Index>(users.size()),
                      rings * grid.num_angles());
  dict.atoms.reserve(rings * grid.num_angles());
  for (int m = 0; m < rings; ++m) {
    for (int gh = 0; gh < grid.num_angles(); ++gh) {
      const Atom atom{m, gh, grid.angles[gh], heights[m]};
      dict.entries.col(dict.ColumnOf(m, gh)) =
          ApmColumn(users, atom.angle, atom.height, config);
      dict.atoms.push_back(atom);
    }
  }
  return dict;
}

Dictionary BuildHeightDictionary(
    std::span<const PathSet> users,
    const std::vector<std::vector<double>>& ring_angles,
    const PositionGrid& grid, const FclaConfig& config) {
  Require(!ring_angles.empty(), ErrorCode::kInvalidArgument,
          "height dictionary: no rings");
  const int per_ring = static_cast<int>(ring_angles.front().size());
  for (const auto& angles : ring_angles) {
    Require(static_cast<int>(angles.size()) == per_ring,
            ErrorCode::kInvalidArgument,
            "height dictionary: rings carry different antenna counts");
    for (std::size_t i = 0; i < angles.size(); ++i) {
      for (std::size_t j = i + 1; j < angles.size(); ++j) {
        if (std::abs(WrapAngle(angles[i] - angles[j])) <
            grid.min_angle * (1.0 - kSpacingSlack)) {
          Fail(ErrorCode::kInvalidArgument,
               "height dictionary: ring angles closer than psi_min");
        }
      }
    }
  }
  Dictionary dict;
  dict.group_size = per_ring;
  const int rings = static_cast<int>(ring_angles.size());
  const int slots = grid.num_heights();
  dict.entries.resize(static_cast<Eigen::Index>(users.size()),
                      rings * slots * per_ring);
  dict.atoms.reserve(rings * slots * per_ring);
  for (int m = 0; m < rings; ++m) {
    for (int gv = 0; gv < slots; ++gv) {
      const int group = m * slots + gv;
      for (int n = 0; n < per_ring; ++n) {
        const Atom atom{group, n, ring_angles[m][n], grid.heights[gv]};
        dict.entries.col(dict.ColumnOf(group, n)) =
            ApmColumn(users, atom.angle, atom.height, config);
        dict.atoms.push_back(atom);
      }
    }
  }
  return dict;
}

std::string PathsToJson(std::span<const PathSet> users) {
  nlohmann::json records = nlohmann::json::array();
  for (std::size_t k = 0; k < users.size(); ++k) {
    for (std::size_t l = 0; l < users[k].paths.size(); ++l) {
      const Path& p = users[k].paths[l];
      records.push_back({{"user", k},
                         {"path", l},
                         {"beta_re", p.gain.real()},
                         {"beta_im", p.gain.imag()},
                         {"theta_el", p.elevation},
                         {"phi_az", p.azimuth}});
    }
  }
  return records.dump(2);
}

std::vector<PathSet> PathsFromJson(const std::string& text) {
  nlohmann::json records;
  try {
    records = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kInvalidArgument,
         std::string("path file is not valid JSON: ") + e.what());
  }
  Require(records.is_array(), ErrorCode::kInvalidArgument,
          "path file must hold a JSON array");
  std::vector<PathSet> users;
  try {
    for (const auto& r : records) {
      const auto k = r.at("user").get<std::size_t>();
      const auto l = r.at("path").get<std::size_t>();
      if (users.size() <= k) users.resize(k + 1);
      auto& paths = users[k].paths;
      if (paths.size() <= l) paths.resize(l + 1);
      paths[l] = Path::Make({r.at("beta_re").get<double>(),
                             r.at("beta_im").get<double>()},
                            r.at("theta_el").get<double>(),
                            r.at("phi_az").get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kInvalidArgument,
         std::string("malformed path record: ") + e.what());
  }
  return users;
}

}  // namespace fcla
