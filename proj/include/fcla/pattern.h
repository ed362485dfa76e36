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

#ifndef FCLA_PATTERN_H_
#define FCLA_PATTERN_H_

namespace fcla {

enum class PatternKind { kOmni, kDirectional };

// Element radiation pattern. The directional family is the x-oriented
// cosine pattern Q sin^k(theta) cos^k(phi) on the front half-space with
// Q = 2(k + 1), which keeps the radiated power over the sphere at 4*pi.
struct PatternSpec {
  PatternKind kind = PatternKind::kOmni;
  double kappa = 1.0;  // ignored for kOmni

  static PatternSpec Omni() { return {PatternKind::kOmni, 1.0}; }
  static PatternSpec Directional(double kappa) {
    return {PatternKind::kDirectional, kappa};
  }

  bool is_omni() const { return kind == PatternKind::kOmni; }
  double normalization() const { return 2.0 * (kappa + 1.0); }
  void Validate() const;
};

// Wraps an angle into (-pi, pi].
double WrapAngle(double radians);

// Power gain for elevation `theta` in [0, pi] and azimuth `phi_rel` measured
// from the element boresight. `phi_rel` is wrapped first.
double PowerGain(const PatternSpec& spec, double theta, double phi_rel);

// Field amplitude sqrt(PowerGain) of an element facing azimuth `psi` toward
// the direction (theta, phi).
double Amplitude(const PatternSpec& spec, double theta, double phi,
                 double psi);

}  // namespace fcla

#endif  // FCLA_PATTERN_H_
