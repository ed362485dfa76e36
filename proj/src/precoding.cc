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

#include "fcla/precoding.h"

#include <cmath>

#include "fcla/error.h"

namespace fcla {

CMatrix Rzf(const CMatrix& channel, double alpha, GramForm form) {
  Require(alpha >= 0.0 && std::isfinite(alpha), ErrorCode::kInvalidArgument,
          "regularization alpha must be finite and >= 0");
  const Eigen::Index users = channel.rows();
  const Eigen::Index antennas = channel.cols();
  if (form == GramForm::kAuto) {
    form = antennas < users ? GramForm::kAntennaSide : GramForm::kUserSide;
  }
  if (form == GramForm::kAntennaSide) {
    CMatrix gram = channel.adjoint() * channel;
    gram.diagonal().array() += alpha;
    return SolveLinearSystem(std::move(gram), channel.adjoint());
  }
  // (H H^H + a I) X = H, then F = X^H.
  CMatrix gram = channel * channel.adjoint();
  gram.diagonal().array() += alpha;
  return SolveLinearSystem(std::move(gram), channel).adjoint();
}

CMatrix RzfSpecial(const CMatrix& channel, LinearPrecoder mode,
                   double noise_power) {
  switch (mode) {
    case LinearPrecoder::kMrt:
      return channel.adjoint();
    case LinearPrecoder::kZf:
      return Rzf(channel, 0.0);
    case LinearPrecoder::kMmse:
      return Rzf(channel, noise_power);
  }
  Fail(ErrorCode::kInternal, "unknown precoder mode");
}

CMatrix NormalizeColumns(const CMatrix& precoder, double power) {
  Require(power > 0 && std::isfinite(power), ErrorCode::kInvalidArgument,
          "power budget must be positive");
  const Eigen::Index users = precoder.cols();
  CMatrix out = precoder;
  const double target = std::sqrt(power / static_cast<double>(users));
  for (Eigen::Index k = 0; k < users; ++k) {
    const double norm = precoder.col(k).norm();
    Require(norm > 0.0 && std::isfinite(norm), ErrorCode::kInvalidArgument,
            "cannot normalize a zero precoder column");
    out.col(k) *= target / norm;
  }
  return out;
}

CMatrix NormalizeServedColumns(const CMatrix& precoder, double power) {
  Require(power > 0 && std::isfinite(power), ErrorCode::kInvalidArgument,
          "power budget must be positive");
  const Eigen::Index users = precoder.cols();
  CMatrix out = precoder;
  if (users == 0) return out;
  const Eigen::VectorXd norms = precoder.colwise().norm().transpose();
  Require(norms.allFinite(), ErrorCode::kInvalidArgument,
          "precoder has non-finite entries");
  const double floor = kUnservedTolerance * norms.maxCoeff();
  const double target = std::sqrt(power / static_cast<double>(users));
  for (Eigen::Index k = 0; k < users; ++k) {
    if (norms(k) <= floor || norms(k) == 0.0) {
      out.col(k).setZero();
    } else {
      out.col(k) *= target / norms(k);
    }
  }
  return out;
}

RateReport EvaluateRates(const CMatrix& channel, const CMatrix& precoder,
                         double noise_power) {
  Require(channel.cols() == precoder.rows(), ErrorCode::kInvalidArgument,
          "channel and precoder dimensions disagree");
  Require(precoder.cols() == channel.rows(), ErrorCode::kInvalidArgument,
          "precoder must carry one column per user");
  Require(noise_power > 0.0, ErrorCode::kInvalidArgument,
          "noise power must be positive");
  const Eigen::Index users = channel.rows();
  const Eigen::MatrixXd gains = (channel * precoder).cwiseAbs2();
  RateReport report;
  report.sinr.resize(users);
  report.rate.resize(users);
  for (Eigen::Index k = 0; k < users; ++k) {
    const double signal = gains(k, k);
    const double interference = gains.row(k).sum() - signal;
    report.sinr[k] = signal / (interference + noise_power);
    report.rate[k] = std::log2(1.0 + report.sinr[k]);
    report.sum_rate += report.rate[k];
  }
  return report;
}

double RzfObjective(const CMatrix& channel, const CMatrix& precoder,
                    double alpha) {
  const Eigen::Index users = channel.rows();
  const CMatrix mui = CMatrix::Identity(users, users) - channel * precoder;
  return mui.squaredNorm() + alpha * precoder.squaredNorm();
}

double PlacementObjective(const CMatrix& channel, double alpha) {
  return RzfObjective(channel, Rzf(channel, alpha), alpha);
}

}  // namespace fcla
