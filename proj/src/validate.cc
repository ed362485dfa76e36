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

#include "fcla/validate.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include "fcla/alternating_solver.h"
#include "fcla/channel.h"
#include "fcla/error.h"
#include "fcla/joint_solver.h"
#include "fcla/oracle.h"
#include "fcla/precoding.h"

namespace fcla {
namespace {

CMatrix RandomMatrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  CMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) m(i, j) = {gauss(rng), gauss(rng)};
  }
  return m;
}

double MinColumnCosine(const CMatrix& a, const CMatrix& b) {
  double worst = 1.0;
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    const double c = std::abs(a.col(k).dot(b.col(k))) /
                     (a.col(k).norm() * b.col(k).norm());
    worst = std::min(worst, c);
  }
  return worst;
}

SuiteResult PatternQuadratureSuite() {
  SuiteResult r{"pattern-quadrature", true, ""};
  std::ostringstream detail;
  for (double kappa : {1.0, 2.0, 3.0}) {
    const double avg = PatternSphereAverage(PatternSpec::Directional(kappa));
    const double err = std::abs(avg - 1.0);
    detail << "kappa=" << kappa << " rel_err=" << err << "; ";
    if (!(err < 1e-3)) r.passed = false;
  }
  r.detail = detail.str();
  return r;
}

SuiteResult RzfLimitSuite() {
  SuiteResult r{"rzf-limit", true, ""};
  std::mt19937_64 rng(20260401);
  double gram_gap = 0.0;
  double zf_gap = 0.0;
  double mrt_cos = 1.0;
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix h = RandomMatrix(rng, 3, 6);
    const double alpha = 0.1 + 0.1 * trial;
    gram_gap = std::max(
        gram_gap, (Rzf(h, alpha, GramForm::kUserSide) -
                   Rzf(h, alpha, GramForm::kAntennaSide))
                      .cwiseAbs()
                      .maxCoeff());
    zf_gap = std::max(
        zf_gap, (Rzf(h, 1e-10) - Rzf(h, 0.0)).cwiseAbs().maxCoeff());
    mrt_cos = std::min(mrt_cos,
                       MinColumnCosine(Rzf(h, 1e8), h.adjoint()));
  }
  r.passed = gram_gap < 1e-10 && zf_gap < 1e-8 && mrt_cos > 1.0 - 1e-6;
  std::ostringstream detail;
  detail << "gram_gap=" << gram_gap << " zf_gap=" << zf_gap
         << " mrt_min_cos=" << mrt_cos;
  r.detail = detail.str();
  return r;
}

SuiteResult OracleEquivalenceSuite() {
  const OracleStudy study = RunOracleStudy(100, 1000);
  std::ostringstream detail;
  detail << study.evaluated << " instances, " << study.infeasible
         << " infeasible, "
         << study.violations << " violations, median gap joint "
         << study.median_gap_joint << " alternating "
         << study.median_gap_alternating;
  return {"oracle-equivalence",
          study.infeasible == 0 && study.violations == 0, detail.str()};
}

double Median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const size_t h = v.size() / 2;
  return v.size() % 2 == 1 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

double PatternSphereAverage(const PatternSpec& spec, int steps) {
  const double dtheta = std::numbers::pi / steps;
  const double dphi = 2.0 * std::numbers::pi / (2 * steps);
  double sum = 0.0;
  for (int i = 0; i < steps; ++i) {
    const double theta = (i + 0.5) * dtheta;
    const double weight = std::sin(theta);
    for (int j = 0; j < 2 * steps; ++j) {
      const double phi = -std::numbers::pi + (j + 0.5) * dphi;
      sum += PowerGain(spec, theta, phi) * weight;
    }
  }
  return sum * dtheta * dphi / (4.0 * std::numbers::pi);
}

OracleStudy RunOracleStudy(int instances, std::uint64_t base_seed) {
  constexpr double kAlpha = 1.0;
  OracleStudy study;
  std::vector<double> gap_joint, gap_alt;
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(instances); ++i) {
    FclaConfig config;
    config.rings = 1 + static_cast<int>(i % 2);
    config.per_ring = 1 + static_cast<int>((i / 2) % 2);
    config.min_spacing = 0.0375;
    config.wavelength = 0.1;
    config.pattern = (i % 3 == 0) ? PatternSpec::Omni()
                                  : PatternSpec::Directional(1.0);
    config = WithSlotCounts(config, 3 + static_cast<int>(i % 2),
                            2 + static_cast<int>((i / 4) % 3));
    const PositionGrid grid = BuildGrid(config);
    const auto users = DrawPaths(3, 2, base_seed + i);
    const OracleResult best = ExhaustiveBest(users, grid, config, {kAlpha});
    const auto joint = SolveJoint(BuildJointDictionary(users, grid, config),
                                  config.rings, config.per_ring, {kAlpha});
    AlternatingOptions alt;
    alt.alpha = kAlpha;
    alt.outer_iterations = 3;
    const auto alternating = SolveAlternating(users, grid, config, alt);
    ++study.evaluated;
    for (const auto* s : {&joint, &alternating}) {
      try {
        CheckPlacement(s->placement, config);
      } catch (const Error&) {
        ++study.infeasible;
        continue;
      }
      const double obj = PlacementObjective(
          SynthesizeChannel(users, s->placement, config).entries, kAlpha);
      if (obj < best.objective * (1.0 - 1e-9)) ++study.violations;
      (s == &joint ? gap_joint : gap_alt)
          .push_back((obj - best.objective) / best.objective);
    }
  }
  study.median_gap_joint = Median(gap_joint);
  study.median_gap_alternating = Median(gap_alt);
  return study;
}

std::vector<SuiteResult> RunValidationSuites() {
  std::vector<SuiteResult> out;
  const std::pair<const char*, SuiteResult (*)()> suites[] = {
      {"pattern-quadrature", PatternQuadratureSuite},
      {"rzf-limit", RzfLimitSuite},
      {"oracle-equivalence", OracleEquivalenceSuite},
  };
  for (const auto& [name, run] : suites) {
    try {
      out.push_back(run());
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("threw: ") + e.what()});
    }
  }
  return out;
}

}  // namespace fcla
