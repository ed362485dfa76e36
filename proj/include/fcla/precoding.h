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

#ifndef FCLA_PRECODING_H_
#define FCLA_PRECODING_H_

#include <vector>

#include "fcla/linalg.h"

namespace fcla {

// Which Gram matrix the regularized inverse is formed with. The two forms
// are algebraically identical:
//   (H^H H + a I_n)^-1 H^H == H^H (H H^H + a I_K)^-1.
enum class GramForm {
  kAuto,         // the smaller of the two
  kUserSide,     // K x K
  kAntennaSide,  // n x n
};

// Regularized zero-forcing precoder for a K x n channel. Returns n x K.
// With alpha == 0 the chosen Gram must be invertible, otherwise throws
// Error(kSingularSystem).
CMatrix Rzf(const CMatrix& channel, double alpha,
            GramForm form = GramForm::kAuto);

enum class LinearPrecoder { kMrt, kZf, kMmse };

CMatrix RzfSpecial(const CMatrix& channel, LinearPrecoder mode,
                   double noise_power);

struct Precoder {
  CMatrix entries;  // n x K
  double alpha = 0.0;
  double power_budget = 0.0;
};

// Scales column k so that ||f_k||^2 = power / K. Throws on a zero column.
CMatrix NormalizeColumns(const CMatrix& precoder, double power);

// Columns at or below this fraction of the largest column norm belong to
// users the placement cannot reach.
inline constexpr double kUnservedTolerance = 1e-12;

// Like NormalizeColumns, but a user whose column is (numerically) zero stays
// unserved: its column is set to zero and the others still get power / K.
CMatrix NormalizeServedColumns(const CMatrix& precoder, double power);

struct RateReport {
  std::vector<double> sinr;
  std::vector<double> rate;  // log2(1 + sinr), bits per channel use
  double sum_rate = 0.0;
};

// Per-user SINR |h_k^H f_k|^2 / (sum_{i != k} |h_k^H f_i|^2 + sigma^2) where
// row k of `channel` is h_k^H.
RateReport EvaluateRates(const CMatrix& channel, const CMatrix& precoder,
                         double noise_power);

// ||I_K - H F||_F^2 + alpha ||F||_F^2.
double RzfObjective(const CMatrix& channel, const CMatrix& precoder,
                    double alpha);

// Objective at the closed-form minimizer F = Rzf(H, alpha).
double PlacementObjective(const CMatrix& channel, double alpha);

}  // namespace fcla

#endif  // FCLA_PRECODING_H_
