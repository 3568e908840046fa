/*
 * Copyright 2026 The optotriplet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "optotriplet/linear_model.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "optotriplet/errors.hpp"

namespace optotriplet {
namespace {

DerivedParams small_model(double coupling = 0.3) {
  RateModel r;
  r.gamma_m = 1e-3;
  r.n_thermal = 10.0;
  r.gamma0_plus = 1.0;
  r.gamma0_minus = 1.2;
  r.gamma_e_plus = 0.05;
  r.gamma_e_minus = 0.02;
  r.coupling_plus = coupling;
  r.coupling_minus = 0.8 * coupling;
  return from_rates(r);
}

// Plain Taylor series with scaling and squaring.
Eigen::Matrix3d taylor_exp(const Eigen::Matrix3d& a) {
  int squarings = 0;
  double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  const Eigen::Matrix3d b = a / std::pow(2.0, squarings);
  Eigen::Matrix3d term = Eigen::Matrix3d::Identity();
  Eigen::Matrix3d sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * b / k;
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

TEST(LinearModelTest, PropagatorsMatchSeriesAndQuadrature) {
  const LinearModel m = LinearModel::from(small_model());
  const double h = 0.05;
  const StepPropagator p = discretize(m, h);
  EXPECT_LT((p.phi - taylor_exp(m.drift * h)).norm(), 1e-14);

  // Composite Simpson on int e^{Ms} ds and int (h - s) e^{Ms} ds.
  const int n = 200;
  Eigen::Matrix3d i1 = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d i2 = Eigen::Matrix3d::Zero();
  for (int k = 0; k <= n; ++k) {
    const double s = h * k / n;
    const double w = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    const Eigen::Matrix3d e = taylor_exp(m.drift * s);
    i1 += w * e;
    i2 += w * (h - s) * e;
  }
  i1 *= h / (3.0 * n);
  i2 *= h / (3.0 * n);
  EXPECT_LT((p.phi1 - i1).norm(), 1e-12 * i1.norm());
  EXPECT_LT((p.phi2 - i2).norm(), 1e-12 * i2.norm());
}

TEST(LinearModelTest, CovarianceBlocks) {
  const LinearModel m = LinearModel::from(small_model());
  const double h = 0.05;
  const StepPropagator p = discretize(m, h);
  // Wiener increments.
  EXPECT_LT((p.covariance.bottomRightCorner<5, 5>() - h * Eigen::MatrixXd::Identity(5, 5)).norm(),
            1e-15);
  // Stationarity: P = phi P phi^T + Q_zeta1.
  const Eigen::Matrix3d stat = stationary_covariance(m);
  const Eigen::Matrix3d q1 = p.covariance.topLeftCorner<3, 3>();
  EXPECT_LT((stat - p.phi * stat * p.phi.transpose() - q1).norm(), 1e-11 * stat.norm());
  // Cross term E[zeta1 dW^T] = int e^{M(h-s)} N ds = phi1 N.
  EXPECT_LT((p.covariance.block<3, 5>(0, 6) - p.phi1 * m.noise).norm(), 1e-14);
  // The factor reproduces the covariance.
  const Eigen::MatrixXd r = p.noise_root;
  EXPECT_LT((r * r.transpose() - p.covariance).norm(), 1e-10 * p.covariance.norm());
}

TEST(LinearModelTest, StationaryCovarianceSolvesLyapunov) {
  const LinearModel m = LinearModel::from(small_model());
  const Eigen::Matrix3d p = stationary_covariance(m);
  const Eigen::Matrix3d res = m.drift * p + p * m.drift.transpose() + m.noise * m.noise.transpose();
  EXPECT_LT(res.norm(), 1e-12 * p.norm());
  EXPECT_TRUE(p.isApprox(p.transpose()));
}

TEST(LinearModelTest, UnstableDriftIsRejected) {
  RateModel r;
  r.gamma_m = 1e-3;
  r.gamma0_plus = 1.0;
  r.gamma0_minus = 1.0;
  r.coupling_plus = 0.01;
  r.coupling_minus = 0.5;  // Stokes-dominated: negative damping
  const LinearModel m = LinearModel::from(from_rates(r));
  EXPECT_GT(m.growth_rate(), 0.0);
  EXPECT_THROW(stationary_covariance(m), NumericalError);
}

TEST(LinearModelTest, MaxRateCoversOpticalAndPartialDamping) {
  const DerivedParams d = small_model(2.0);
  const LinearModel m = LinearModel::from(d);
  const double partial = d.gamma_m + 4.0 / d.gamma_plus + 2.56 / d.gamma_minus;
  EXPECT_GE(m.max_rate(), partial * (1.0 - 1e-12));
  EXPECT_GE(m.max_rate(), d.gamma_minus);
  EXPECT_THROW(discretize(m, 0.0), ParameterError);
}

}  // namespace
}  // namespace optotriplet
