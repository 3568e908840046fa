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

#ifndef OPTOTRIPLET_LINEAR_MODEL_HPP_
#define OPTOTRIPLET_LINEAR_MODEL_HPP_

#include <Eigen/Dense>

#include "optotriplet/params.hpp"

namespace optotriplet {

// Amplitude-quadrature Langevin system dx = M x dt + N dW + e_d f dt with
// state x = (c+, c-, d) and noise channels (a+, e+, a-, e-, q). Every channel
// is a unit-intensity Wiener process; the mechanical bath is scaled to
// 2 gamma_m (n_T + 1/2).
struct LinearModel {
  static constexpr int kStates = 3;
  static constexpr int kNoises = 5;
  enum Noise { kAPlus = 0, kEPlus = 1, kAMinus = 2, kEMinus = 3, kBath = 4 };

  Eigen::Matrix3d drift;
  Eigen::Matrix<double, 3, 5> noise;
  Eigen::Vector3d force;  // where f_sa enters
  double root_gamma0_plus = 0.0;
  double root_gamma0_minus = 0.0;

  static LinearModel from(const DerivedParams& d);

  // Largest real part of the drift eigenvalues.
  double growth_rate() const;
  // max(gamma+, gamma-, gamma_m + G+ + G-, spectral radius of the drift).
  double max_rate() const;
};

// Exact one-step propagators for a step h.
//   phi  = e^{Mh}
//   phi1 = int_0^h e^{Ms} ds
//   phi2 = int_0^h int_0^s e^{Mr} dr ds
// noise_root is an 11 x r factor of the joint covariance of
// (zeta1, zeta2, dW), where zeta1 is the state noise increment, zeta2 its
// running integral over the step and dW the raw channel increments.
struct StepPropagator {
  double h = 0.0;
  Eigen::Matrix3d phi;
  Eigen::Matrix3d phi1;
  Eigen::Matrix3d phi2;
  Eigen::MatrixXd noise_root;
  Eigen::MatrixXd covariance;  // 11 x 11
};

StepPropagator discretize(const LinearModel& model, double h);

// Solves M P + P M^T + N N^T = 0. Throws NumericalError when the drift is
// not strictly stable.
Eigen::Matrix3d stationary_covariance(const LinearModel& model);

}  // namespace optotriplet

#endif  // OPTOTRIPLET_LINEAR_MODEL_HPP_
