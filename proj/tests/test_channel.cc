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

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "fcla/channel.h"
#include "fcla/error.h"
#include "fcla/pattern.h"
#include "test_util.h"

namespace fcla {
namespace {

constexpr double kPi = std::numbers::pi;
using testing::MaxAbs;
using testing::TinyConfig;

// Independent construction of user k's channel entry at one antenna: the
// downlink response sum_l beta a e^{j k0 <p, u>} / sqrt(L), conjugated as a
// row of H.
Complex DirectEntry(const PathSet& user, double psi, double z,
                    const FclaConfig& config) {
  const auto p = PositionOf(psi, z, config.radius);
  const double k0 = 2 * kPi / config.wavelength;
  Complex h = 0.0;
  for (const Path& path : user.paths) {
    const double ux = std::sin(path.elevation) * std::cos(path.azimuth);
    const double uy = std::sin(path.elevation) * std::sin(path.azimuth);
    const double uz = std::cos(path.elevation);
    double gain = 1.0;
    if (!config.pattern.is_omni()) {
      double rel = std::fmod(path.azimuth - psi, 2 * kPi);
      if (rel > kPi) rel -= 2 * kPi;
      if (rel <= -kPi) rel += 2 * kPi;
      const double c = std::cos(rel);
      gain = std::abs(rel) > kPi / 2
                 ? 0.0
                 : 2 * (config.pattern.kappa + 1) *
                       std::pow(std::sin(path.elevation), config.pattern.kappa) *
                       std::pow(c, config.pattern.kappa);
    }
    h += path.gain * std::sqrt(gain) *
         std::exp(Complex(0, k0 * (p[0] * ux + p[1] * uy + p[2] * uz)));
  }
  return std::conj(h) / std::sqrt(static_cast<double>(user.paths.size()));
}

TEST(Channel, DrawPathsShapeAndRanges) {
  const auto users = DrawPaths(16, 4, 99);
  ASSERT_EQ(users.size(), 16u);
  for (const auto& u : users) {
    ASSERT_EQ(u.paths.size(), 4u);
    for (const auto& p : u.paths) {
      EXPECT_GE(p.elevation, kPi / 6);
      EXPECT_LE(p.elevation, 5 * kPi / 6);
      EXPECT_GE(p.azimuth, 0.0);
      EXPECT_LT(p.azimuth, 2 * kPi);
      EXPECT_NEAR(p.vx * p.vx + p.vy * p.vy + p.vz * p.vz, 1.0, 1e-12);
    }
  }
}

TEST(Channel, DrawPathsDeterministic) {
  const auto a = DrawPaths(5, 3, 1234);
  const auto b = DrawPaths(5, 3, 1234);
  const auto c = DrawPaths(5, 3, 1235);
  bool differs = false;
  for (size_t k = 0; k < a.size(); ++k) {
    for (size_t l = 0; l < a[k].paths.size(); ++l) {
      EXPECT_EQ(a[k].paths[l].gain, b[k].paths[l].gain);
      EXPECT_EQ(a[k].paths[l].azimuth, b[k].paths[l].azimuth);
      EXPECT_EQ(a[k].paths[l].elevation, b[k].paths[l].elevation);
      differs |= a[k].paths[l].gain != c[k].paths[l].gain;
    }
  }
  EXPECT_TRUE(differs);
}

TEST(Channel, GainMomentsMatchUnitComplexGaussian) {
  const auto users = DrawPaths(1, 100000, 5);
  double sum = 0.0, sum_sq = 0.0;
  for (const auto& p : users[0].paths) {
    const double g = std::norm(p.gain);
    sum += g;
    sum_sq += g * g;
  }
  const double n = 100000.0;
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  EXPECT_NEAR(mean, 1.0, 0.02);
  EXPECT_NEAR(var, 1.0, 0.05);
}

TEST(Channel, ApmEntryTrivialCases) {
  FclaConfig config;
  config.pattern = PatternSpec::Omni();
  PathSet up{{Path::Make(1.0, 0.0, 0.0)}};
  EXPECT_NEAR(std::abs(ApmEntry(up, 0.4, 0.0, config) - Complex(1.0)), 0.0,
              1e-15);
  PathSet side{{Path::Make(1.0, kPi / 2, 0.0)}};
  const Complex expected =
      std::exp(Complex(0, -2 * kPi * config.radius / config.wavelength));
  EXPECT_NEAR(std::abs(ApmEntry(side, 0.0, 0.37, config) - expected), 0.0,
              1e-12);
}

TEST(Channel, ApmEntryMatchesDirectConstruction) {
  for (bool omni : {true, false}) {
    FclaConfig config;
    if (omni) config.pattern = PatternSpec::Omni();
    const auto users = DrawPaths(6, 4, 77);
    const PositionGrid grid = BuildGrid(config);
    for (const auto& user : users) {
      for (int g = 0; g < grid.num_angles(); g += 3) {
        const double z = grid.heights[g % grid.num_heights()];
        EXPECT_NEAR(std::abs(ApmEntry(user, grid.angles[g], z, config) -
                             DirectEntry(user, grid.angles[g], z, config)),
                    0.0, 1e-12);
      }
    }
  }
}

TEST(Channel, UnitModulusForOmniSinglePath) {
  FclaConfig config;
  config.pattern = PatternSpec::Omni();
  const auto users = DrawPaths(8, 1, 4);
  for (auto user : users) {
    user.paths[0].gain = std::polar(1.0, std::arg(user.paths[0].gain));
    EXPECT_NEAR(std::abs(ApmEntry(user, 1.3, 0.2, config)), 1.0, 1e-12);
  }
}

TEST(Channel, SynthesizeMatchesPathLoop) {
  const FclaConfig config = TinyConfig(2, 1, 4, 3);
  const auto users = DrawPaths(2, 3, 11);
  const Placement placement = {{0.0, 0.0}, {kPi, 2 * config.min_spacing}};
  const ChannelMatrix h = SynthesizeChannel(users, placement, config);
  ASSERT_EQ(h.entries.rows(), 2);
  ASSERT_EQ(h.entries.cols(), 2);
  for (int k = 0; k < 2; ++k) {
    for (int j = 0; j < 2; ++j) {
      EXPECT_NEAR(std::abs(h.entries(k, j) -
                           DirectEntry(users[k], placement[j].angle,
                                       placement[j].height, config)),
                  0.0, 1e-12);
    }
  }
}

TEST(Channel, SynthesizePermutesWithPlacement) {
  const FclaConfig config = TinyConfig(1, 3, 6, 2);
  const auto users = DrawPaths(4, 2, 8);
  const PositionGrid grid = BuildGrid(config);
  Placement p = {{grid.angles[0], 0}, {grid.angles[2], 0}, {grid.angles[4], 0}};
  const CMatrix a = SynthesizeChannel(users, p, config).entries;
  std::swap(p[0], p[2]);
  const CMatrix b = SynthesizeChannel(users, p, config).entries;
  EXPECT_EQ(a.col(0), b.col(2));
  EXPECT_EQ(a.col(2), b.col(0));
  EXPECT_EQ(a.col(1), b.col(1));
}

TEST(Channel, RejectsInfeasiblePlacements) {
  const FclaConfig config = TinyConfig(2, 2, 6, 3);
  const auto users = DrawPaths(2, 2, 1);
  const double step = 2 * kPi / 6;
  // Angles closer than psi_min within one ring.
  EXPECT_THROW(SynthesizeChannel(users, {{0, 0}, {0.5 * step, 0}}, config),
               Error);
  // Rings closer than d_min.
  EXPECT_THROW(
      SynthesizeChannel(users, {{0, 0}, {0, 0.5 * config.min_spacing}}, config),
      Error);
  // Wrap-around gap across 2 pi.
  EXPECT_THROW(
      SynthesizeChannel(users, {{0.1, 0}, {2 * kPi - 0.1, 0}}, config), Error);
  EXPECT_NO_THROW(
      SynthesizeChannel(users, {{0, 0}, {step, 0}, {0, config.min_spacing}},
                        config));
}

TEST(Channel, JointDictionaryLayout) {
  const FclaConfig config = TinyConfig(2, 2, 5, 3);
  const PositionGrid grid = BuildGrid(config);
  const auto users = DrawPaths(3, 2, 2);
  const Dictionary d = BuildJointDictionary(users, grid, config);
  ASSERT_EQ(d.num_atoms(), 15);
  EXPECT_EQ(d.group_size, 5);
  EXPECT_EQ(d.num_groups(), 3);
  for (int g = 0; g < d.num_atoms(); ++g) {
    const Atom& atom = d.atoms[g];
    EXPECT_EQ(d.ColumnOf(atom.group, atom.member), g);
    EXPECT_EQ(atom.angle, grid.angles[atom.member]);
    EXPECT_EQ(atom.height, grid.heights[atom.group]);
    EXPECT_EQ(d.entries.col(g),
              ApmColumn(users, atom.angle, atom.height, config));
  }
}

TEST(Channel, SynthesizeEqualsDictionaryGather) {
  const FclaConfig config = TinyConfig(2, 2, 6, 4);
  const PositionGrid grid = BuildGrid(config);
  const auto users = DrawPaths(4, 3, 21);
  const Dictionary d = BuildJointDictionary(users, grid, config);
  const std::vector<std::pair<int, int>> picks = {{0, 1}, {0, 4}, {2, 0}, {2, 3}};
  Placement placement;
  CMatrix gathered(4, 4);
  for (size_t j = 0; j < picks.size(); ++j) {
    placement.push_back({grid.angles[picks[j].second],
                         grid.heights[picks[j].first]});
    gathered.col(j) = d.entries.col(d.ColumnOf(picks[j].first, picks[j].second));
  }
  EXPECT_EQ(SynthesizeChannel(users, placement, config).entries, gathered);
}

TEST(Channel, AngleDictionarySingleHeightMatchesJoint) {
  const FclaConfig config = TinyConfig(1, 2, 5, 1);
  const PositionGrid grid = BuildGrid(config);
  const auto users = DrawPaths(3, 2, 13);
  const std::vector<double> heights = {grid.heights[0]};
  const Dictionary a = BuildAngleDictionary(users, heights, grid, config);
  const Dictionary j = BuildJointDictionary(users, grid, config);
  EXPECT_EQ(a.entries, j.entries);
  EXPECT_EQ(a.group_size, grid.num_angles());
}

TEST(Channel, AngleDictionaryRejectsCloseHeights) {
  const FclaConfig config = TinyConfig(2, 2, 5, 3);
  const PositionGrid grid = BuildGrid(config);
  const auto users = DrawPaths(3, 2, 13);
  const std::vector<double> heights = {grid.heights[1], grid.heights[1]};
  EXPECT_THROW(BuildAngleDictionary(users, heights, grid, config), Error);
}

TEST(Channel, HeightDictionaryBlocks) {
  const FclaConfig config = TinyConfig(2, 2, 6, 3);
  const PositionGrid grid = BuildGrid(config);
  const auto users = DrawPaths(3, 2, 31);
  const std::vector<std::vector<double>> angles = {
      {grid.angles[0], grid.angles[3]}, {grid.angles[1], grid.angles[5]}};
  const Dictionary d = BuildHeightDictionary(users, angles, grid, config);
  EXPECT_EQ(d.group_size, 2);
  EXPECT_EQ(d.num_groups(), 2 * grid.num_heights());
  for (int m = 0; m < 2; ++m) {
    for (int gv = 0; gv < grid.num_heights(); ++gv) {
      for (int n = 0; n < 2; ++n) {
        const int col = d.ColumnOf(m * grid.num_heights() + gv, n);
        for (int k = 0; k < 3; ++k) {
          EXPECT_EQ(d.entries(k, col),
                    ApmEntry(users[k], angles[m][n], grid.heights[gv], config));
        }
      }
    }
  }
  const std::vector<std::vector<double>> bad = {
      {grid.angles[0], grid.angles[0] + 0.01}, {grid.angles[1], grid.angles[4]}};
  EXPECT_THROW(BuildHeightDictionary(users, bad, grid, config), Error);
}

TEST(Channel, EntriesBoundedByGains) {
  FclaConfig config;
  const auto users = DrawPaths(8, 4, 17);
  const double q = config.pattern.normalization();
  for (const auto& user : users) {
    double bound = 0.0;
    for (const auto& p : user.paths) bound += std::abs(p.gain);
    bound *= std::sqrt(q / 4.0);
    for (double psi = 0.0; psi < 6.2; psi += 0.5) {
      const Complex e = ApmEntry(user, psi, 0.3, config);
      EXPECT_TRUE(std::isfinite(e.real()) && std::isfinite(e.imag()));
      EXPECT_LE(std::abs(e), bound + 1e-12);
    }
  }
}

TEST(Channel, PathsJsonRoundTrip) {
  const auto users = DrawPaths(3, 2, 55);
  const auto back = PathsFromJson(PathsToJson(users));
  ASSERT_EQ(back.size(), users.size());
  for (size_t k = 0; k < users.size(); ++k) {
    ASSERT_EQ(back[k].paths.size(), users[k].paths.size());
    for (size_t l = 0; l < users[k].paths.size(); ++l) {
      EXPECT_EQ(back[k].paths[l].gain, users[k].paths[l].gain);
      EXPECT_EQ(back[k].paths[l].elevation, users[k].paths[l].elevation);
      EXPECT_EQ(back[k].paths[l].azimuth, users[k].paths[l].azimuth);
    }
  }
  EXPECT_THROW(PathsFromJson("{not json"), Error);
}

}  // namespace
}  // namespace fcla
