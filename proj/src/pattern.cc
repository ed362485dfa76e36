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

#include "fcla/pattern.h"

#include <cmath>
#include <numbers>

#include "fcla/error.h"

namespace fcla {

void PatternSpec::Validate() const {
  if (kind == PatternKind::kDirectional) {
    Require(std::isfinite(kappa) && kappa >= 1.0, ErrorCode::kInvalidArgument,
            "pattern sharpness kappa must be >= 1");
  }
}

double WrapAngle(double radians) {
  double wrapped = std::remainder(radians, 2.0 * std::numbers::pi);
  if (wrapped <= -std::numbers::pi) wrapped += 2.0 * std::numbers::pi;
  return wrapped;
}

double PowerGain(const PatternSpec& spec, double theta, double phi_rel) {
  if (spec.is_omni()) return 1.0;
  const double phi = WrapAngle(phi_rel);
  if (std::abs(phi) > std::numbers::pi / 2) return 0.0;
  const double s = std::max(0.0, std::sin(theta));
  const double c = std::max(0.0, std::cos(phi));
  return spec.normalization() * std::pow(s, spec.kappa) *
         std::pow(c, spec.kappa);
}

double Amplitude(const PatternSpec& spec, double theta, double phi,
                 double psi) {
  if (spec.is_omni()) return 1.0;
  return std::sqrt(PowerGain(spec, theta, phi - psi));
}

}  // namespace fcla
