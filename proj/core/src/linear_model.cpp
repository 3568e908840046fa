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

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "optotriplet/errors.hpp"

namespace optotriplet {
namespace {

constexpr int kJoint = 11;  // zeta1 (3), zeta2 (3), dW (5)

// e^{Ms} and int_0^s e^{Mu} du from one augmented exponential.
void exp_and_integral(const Eigen::Matrix3d& m, double s, Eigen::Matrix3d& e,
                      Eigen::Matrix3d& e1) {
  Eigen::Matrix<double, 6, 6> aug = Eigen::Matrix<double, 6, 6>::Zero();
  aug.topLeftCorner<3, 3>() = m * s;
  aug.topRightCorner<3, 3>() = Eigen::Matrix3d::Identity() * s;
  const Eigen::Matrix<double, 6, 6> ex = aug.exp();
  e = ex.topLeftCorner<3, 3>();
  e1 = ex.topRightCorner<3, 3>();
}

Eigen::Matrix<double, kJoint, 5> kernel(const LinearModel& model, double r) {
  Eigen::Matrix3d e, e1;
  exp_and_integral(model.drift, r, e, e1);
  Eigen::Matrix<double, kJoint, 5> k;
  k.topRows<3>() = e * model.noise;
  k.middleRows<3>(3) = e1 * model.noise;
  k.bottomRows<5>() = Eigen::Matrix<double, 5, 5>::Identity();
  return k;
}

}  // namespace

LinearModel LinearModel::from(const DerivedParams& d) {
  const double c0 = d.c0();
  LinearModel m;
  m.drift << -d.gamma_plus, 0.0, -d.eta_plus * c0,
             0.0, -d.gamma_minus, d.eta_minus * c0,
             d.eta_plus * c0, d.eta_minus * c0, -d.gamma_m;
  m.noise.setZero();
  m.noise(0, kAPlus) = std::sqrt(2.0 * d.gamma0_plus);
  m.noise(0, kEPlus) = std::sqrt(2.0 * d.gamma_e_plus);
  m.noise(1, kAMinus) = std::sqrt(2.0 * d.gamma0_minus);
  m.noise(1, kEMinus) = std::sqrt(2.0 * d.gamma_e_minus);
  m.noise(2, kBath) = std::sqrt(2.0 * d.gamma_m * (d.n_thermal + 0.5));
  m.force << 0.0, 0.0, 1.0;
  m.root_gamma0_plus = m.noise(0, kAPlus);
  m.root_gamma0_minus = m.noise(1, kAMinus);
  if (!m.drift.allFinite() || !m.noise.allFinite()) {
    throw ParameterError("linear model has non-finite coefficients");
  }
  return m;
}

double LinearModel::growth_rate() const {
  const Eigen::EigenSolver<Eigen::Matrix3d> es(drift, false);
  return es.eigenvalues().real().maxCoeff();
}

double LinearModel::max_rate() const {
  const double gp = -drift(0, 0);
  const double gm = -drift(1, 1);
  const double sp = drift(2, 0) * drift(2, 0) / gp;
  const double sm = drift(2, 1) * drift(2, 1) / gm;
  const Eigen::EigenSolver<Eigen::Matrix3d> es(drift, false);
  const double radius = es.eigenvalues().cwiseAbs().maxCoeff();
  return std::max({gp, gm, -drift(2, 2) + sp + sm, radius});
}

StepPropagator discretize(const LinearModel& model, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw ParameterError("time step must be positive");

  StepPropagator p;
  p.h = h;

  // [[M h, I h, 0], [0, 0, I h], [0, 0, 0]] carries phi, phi1 and phi2.
  Eigen::Matrix<double, 9, 9> aug = Eigen::Matrix<double, 9, 9>::Zero();
  aug.block<3, 3>(0, 0) = model.drift * h;
  aug.block<3, 3>(0, 3) = Eigen::Matrix3d::Identity() * h;
  aug.block<3, 3>(3, 6) = Eigen::Matrix3d::Identity() * h;
  const Eigen::Matrix<double, 9, 9> ex = aug.exp();
  p.phi = ex.block<3, 3>(0, 0);
  p.phi1 = ex.block<3, 3>(0, 3);
  p.phi2 = ex.block<3, 3>(0, 6);

  using Rule = boost::math::quadrature::gauss<double, 12>;
  const auto& nodes = Rule::abscissa();
  const auto& weights = Rule::weights();
  Eigen::Matrix<double, kJoint, kJoint> cov = Eigen::Matrix<double, kJoint, kJoint>::Zero();
  const double half = 0.5 * h;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const double sign : {-1.0, 1.0}) {
      const auto k = kernel(model, half + sign * half * nodes[i]);
      cov.noalias() += weights[i] * half * (k * k.transpose());
    }
  }
  cov = 0.5 * (cov + cov.transpose()).eval();
  p.covariance = cov;

  // Factor in scaled variables; the blocks differ by many orders of magnitude.
  Eigen::Matrix<double, kJoint, 1> scale;
  for (int i = 0; i < kJoint; ++i) {
    scale(i) = cov(i, i) > 0.0 ? std::sqrt(cov(i, i)) : 1.0;
  }
  const Eigen::Matrix<double, kJoint, kJoint> unit =
      scale.cwiseInverse().asDiagonal() * cov * scale.cwiseInverse().asDiagonal();
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, kJoint, kJoint>> es(unit);
  if (es.info() != Eigen::Success) {
    throw NumericalError("noise covariance factorisation failed");
  }
  const auto& lambda = es.eigenvalues();
  const double cutoff = 1e-14 * lambda.maxCoeff();
  int kept = 0;
  for (int i = 0; i < kJoint; ++i) kept += lambda(i) > cutoff ? 1 : 0;
  p.noise_root.resize(kJoint, kept);
  int col = 0;
  for (int i = 0; i < kJoint; ++i) {
    if (lambda(i) <= cutoff) continue;
    p.noise_root.col(col++) = scale.asDiagonal() * es.eigenvectors().col(i) * std::sqrt(lambda(i));
  }
  return p;
}

Eigen::Matrix3d stationary_covariance(const LinearModel& model) {
  if (!(model.growth_rate() < 0.0)) {
    throw NumericalError("drift is not stable; the dynamics grow without bound");
  }
  // vec(M P + P M^T) = (I (x) M + M (x) I) vec(P)
  const Eigen::Matrix3d& m = model.drift;
  const Eigen::Matrix3d i3 = Eigen::Matrix3d::Identity();
  Eigen::Matrix<double, 9, 9> op;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      op.block<3, 3>(3 * r, 3 * c) = i3(r, c) * m + m(r, c) * i3;
    }
  }
  const Eigen::Matrix3d q = model.noise * model.noise.transpose();
  const Eigen::Matrix<double, 9, 1> rhs = -Eigen::Map<const Eigen::Matrix<double, 9, 1>>(q.data());
  const Eigen::Matrix<double, 9, 1> vec = op.fullPivLu().solve(rhs);
  Eigen::Matrix3d p = Eigen::Map<const Eigen::Matrix3d>(vec.data());
  return 0.5 * (p + p.transpose());
}

}  // namespace optotriplet
