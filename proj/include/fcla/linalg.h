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

#ifndef FCLA_LINALG_H_
#define FCLA_LINALG_H_

#include <complex>

#include <Eigen/Dense>

namespace fcla {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Solves A X = B by Gaussian elimination with partial (row) pivoting.
// Throws Error(kSingularSystem) when a pivot magnitude drops below
// rel_tol * max|A_ij|.
CMatrix SolveLinearSystem(CMatrix a, CMatrix b, double rel_tol = 1e-12);

}  // namespace fcla

#endif  // FCLA_LINALG_H_
