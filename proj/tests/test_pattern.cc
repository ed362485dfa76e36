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
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "fcla/error.h"
#include "fcla/pattern.h"
#include "fcla/validate.h"

namespace fcla {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Pattern, BoresightGain) {
  EXPECT_DOUBLE_EQ(PowerGain(PatternSpec::Directional(1), kPi / 2, 0.0), 4.0);
}

TEST(Pattern, BackLobeIsZero) {
  EXPECT_EQ(PowerGain(PatternSpec::Directional(1), kPi / 2, kPi), 0.0);
  EXPECT_EQ(PowerGain(PatternSpec::Directional(2), kPi / 3, -2.0), 0.0);
}

TEST(Pattern, OmniIsFlat) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(PowerGain(PatternSpec::Omni(), u(rng), u(rng)), 1.0);
    EXPECT_EQ(Amplitude(PatternSpec::Omni(), u(rng), u(rng), u(rng)), 1.0);
  }
}

TEST(Pattern, AmplitudeExamples) {
  const auto d = PatternSpec::Directional(1);
  EXPECT_NEAR(Amplitude(d, kPi / 2, 0.7, 0.7), 2.0, 1e-15);
  EXPECT_NEAR(Amplitude(d, kPi / 2, 0.2 + kPi / 3, 0.2), 1.4142135623730951,
              1e-14);
}

TEST(Pattern, WrapsRelativeAngle) {
  const auto d = PatternSpec::Directional(1);
  EXPECT_NEAR(PowerGain(d, 1.0, 0.3 + 2 * kPi), PowerGain(d, 1.0, 0.3),
              1e-14);
  EXPECT_NEAR(Amplitude(d, 1.0, 0.1, 2 * kPi - 0.2), Amplitude(d, 1.0, 0.3, 0.0),
              1e-14);
  EXPECT_DOUBLE_EQ(WrapAngle(-kPi), kPi);
  EXPECT_DOUBLE_EQ(WrapAngle(kPi), kPi);
  EXPECT_NEAR(WrapAngle(3 * kPi / 2), -kPi / 2, 1e-15);
}

TEST(Pattern, EvenAndMonotoneInRelativeAngle) {
  for (double kappa : {1.0, 1.5, 3.0}) {
    const auto d = PatternSpec::Directional(kappa);
    double prev = Amplitude(d, 1.1, 0.0, 0.0);
    for (int i = 1; i <= 100; ++i) {
      const double delta = i * (kPi / 2) / 100;
      const double a = Amplitude(d, 1.1, delta, 0.0);
      EXPECT_NEAR(a, Amplitude(d, 1.1, -delta, 0.0), 1e-15);
      EXPECT_LE(a, prev + 1e-15);
      prev = a;
    }
  }
}

TEST(Pattern, PeakGrowsWithKappa) {
  double prev = 0.0;
  for (double kappa = 1.0; kappa <= 6.0; kappa += 0.5) {
    const double peak = PowerGain(PatternSpec::Directional(kappa), kPi / 2, 0);
    EXPECT_DOUBLE_EQ(peak, 2 * (kappa + 1));
    EXPECT_GT(peak, prev);
    prev = peak;
  }
}

TEST(Pattern, SphereAverageIsOne) {
  for (double kappa : {1.0, 2.0, 3.0}) {
    EXPECT_LT(std::abs(PatternSphereAverage(PatternSpec::Directional(kappa)) -
                       1.0),
              1e-3)
        << "kappa=" << kappa;
  }
}

TEST(Pattern, RejectsSmallKappa) {
  EXPECT_THROW(PatternSpec::Directional(0.5).Validate(), Error);
  EXPECT_NO_THROW(PatternSpec::Omni().Validate());
}

}  // namespace
}  // namespace fcla
