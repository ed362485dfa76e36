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

#include "fcla/linalg.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "fcla/error.h"

namespace fcla {

CMatrix SolveLinearSystem(CMatrix a, CMatrix b, double rel_tol) {
  const Eigen::Index n = a.rows();
  Require(a.cols() == n, ErrorCode::kInvalidArgument,
          "SolveLinearSystem: matrix must be square");
  Require(b.rows() == n, ErrorCode::kInvalidArgument,
          "SolveLinearSystem: right-hand side row count mismatch");
  const double scale = n == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
  const double threshold = rel_tol * scale;

  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    double best = std::abs(a(col, col));
    for (Eigen::Index row = col + 1; row < n; ++row) {
      const double mag = std::abs(a(row, col));
      if (mag > best) {
        best = mag;
        pivot = row;
      }
    }
    if (!(best > threshold) || scale == 0.0) {
      Fail(ErrorCode::kSingularSystem,
           "singular linear system: pivot " + std::to_string(best) +
               " at column " + std::to_string(col));
    }
    if (pivot != col) {
      a.row(col).swap(a.row(pivot));
      b.row(col).swap(b.row(pivot));
    }
    const Complex inv = 1.0 / a(col, col);
    for (Eigen::Index row = col + 1; row < n; ++row) {
      const Complex factor = a(row, col) * inv;
      if (factor == Complex(0.0, 0.0)) continue;
      a.row(row).tail(n - col) -= factor * a.row(col).tail(n - col);
      b.row(row) -= factor * b.row(col);
    }
  }

  // Back substitution.
  for (Eigen::Index row = n - 1; row >= 0; --row) {
    if (row + 1 < n) {
      b.row(row) -= a.row(row).tail(n - row - 1) * b.bottomRows(n - row - 1);
    }
    b.row(row) /= a(row, row);
  }
  return b;
}

}  // namespace fcla
