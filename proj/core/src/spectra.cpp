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

#include "optotriplet/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "optotriplet/errors.hpp"

namespace optotriplet {
namespace {

constexpr Complex kI{0.0, 1.0};

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b));
}

}  // namespace

Complex optical_damping(const DerivedParams& d, double omega) {
  const Complex plus = d.eta_plus * d.eta_plus / Complex(d.gamma_plus, -omega);
  const Complex minus = d.eta_minus * d.eta_minus / Complex(d.gamma_minus, -omega);
  return (plus - minus) * d.c0_squared;
}

CoeffSet coeffs(const DerivedParams& d, double omega) {
  if (!std::isfinite(omega)) {
    throw ParameterError("spectral frequency must be finite");
  }
  const double c0 = d.c0();
  const double drive_plus = d.eta_plus * c0;
  const double drive_minus = d.eta_minus * c0;
  if (!(drive_plus != 0.0) || !std::isfinite(drive_plus)) {
    throw ParameterError("eta_plus * C0 vanishes; B+ and Be+ are undefined");
  }
  if (!(drive_minus != 0.0) || !std::isfinite(drive_minus)) {
    throw ParameterError("eta_minus * C0 vanishes; B- and Be- are undefined");
  }

  CoeffSet c;
  c.omega = omega;
  c.G = optical_damping(d, omega);
  c.Gamma_m = d.gamma_m + c.G;
  const Complex mech = c.Gamma_m - kI * omega;

  const double root_plus = std::sqrt(2.0 * d.gamma0_plus);
  const double root_minus = std::sqrt(2.0 * d.gamma0_minus);
  const Complex width_plus(d.gamma_plus, -omega);
  const Complex width_minus(d.gamma_minus, -omega);
  const Complex refl_plus(d.gamma0_plus - d.gamma_e_plus, omega);
  const Complex refl_minus(d.gamma0_minus - d.gamma_e_minus, omega);

  c.A_plus = root_plus * drive_plus / width_plus;
  c.A_minus = root_minus * drive_minus / width_minus;
  c.B_plus = refl_plus * mech / (root_plus * drive_plus);
  c.B_minus = refl_minus * mech / (root_minus * drive_minus);
  c.Be_plus = root_plus * mech / drive_plus;
  c.Be_minus = root_minus * mech / drive_minus;
  c.Y_plus = c.A_plus / c.B_plus;
  c.Y_minus = c.A_minus / c.B_minus;
  c.Ye_plus = c.A_plus / c.Be_plus;
  c.Ye_minus = c.A_minus / c.Be_minus;

  c.xi_plus = refl_plus / width_plus;
  c.xi_minus = refl_minus / width_minus;
  c.mu_plus = 2.0 * std::sqrt(d.gamma0_plus * d.gamma_e_plus) / width_plus;
  c.mu_minus = 2.0 * std::sqrt(d.gamma0_minus * d.gamma_e_minus) / width_minus;

  c.loss_ratio_plus = d.gamma_e_plus / d.gamma0_plus;
  c.loss_ratio_minus = d.gamma_e_minus / d.gamma0_minus;
  return c;
}

double s_qu(const CoeffSet& c, Complex y) {
  const double main_plus = std::norm(c.B_plus) * std::norm(y - 0.5 + c.Y_plus);
  const double main_minus = std::norm(c.B_minus) * std::norm(y + 0.5 + c.Y_minus);
  double loss = 0.0;
  if (c.loss_ratio_plus != 0.0) {
    loss += c.loss_ratio_plus * std::norm(c.Be_plus) * std::norm(y - 0.5 + c.Ye_plus);
  }
  if (c.loss_ratio_minus != 0.0) {
    loss += c.loss_ratio_minus * std::norm(c.Be_minus) * std::norm(y + 0.5 + c.Ye_minus);
  }
  return main_plus + main_minus + loss;
}

double s_thermal(const DerivedParams& d) {
  return 2.0 * d.gamma_m * (d.n_thermal + 0.5);
}

double s_sql(double gamma_m, double omega) {
  return 2.0 * std::hypot(gamma_m, omega);
}

double measurement_strength(const DerivedParams& d, double omega) {
  const double w2 = omega * omega;
  const double plus = 2.0 * d.gamma_plus * d.eta_plus * d.eta_plus /
                      (d.gamma_plus * d.gamma_plus + w2);
  const double minus = 2.0 * d.gamma_minus * d.eta_minus * d.eta_minus /
                       (d.gamma_minus * d.gamma_minus + w2);
  return (plus + minus) * d.c0_squared;
}

bool is_lossless(const DerivedParams& d) {
  return d.gamma_e_plus == 0.0 && d.gamma_e_minus == 0.0;
}

bool is_symmetric(const DerivedParams& d) {
  return nearly_equal(d.eta_plus, d.eta_minus) &&
         nearly_equal(d.gamma0_plus, d.gamma0_minus) &&
         nearly_equal(d.gamma_e_plus, d.gamma_e_minus);
}

double s_qu_sym_lossless(const DerivedParams& d, double omega) {
  if (!is_symmetric(d) || !is_lossless(d)) {
    throw ParameterError(
        "closed form needs symmetric lossless parameters "
        "(eta+ = eta-, gamma0+ = gamma0-, gamma_e+- = 0)");
  }
  const double k = measurement_strength(d, omega);
  return (d.gamma_m * d.gamma_m + omega * omega) / k;
}

ResonantEstimate s_qu_nonsym_resonant(const DerivedParams& d, double omega) {
  if (!is_lossless(d)) {
    throw ParameterError("nearly-resonant form is only defined without optical loss");
  }
  const double rate_plus = d.eta_plus * d.eta_plus * d.c0_squared / d.gamma_plus;
  const double rate_minus = d.eta_minus * d.eta_minus * d.c0_squared / d.gamma_minus;
  const double g_sum = rate_plus + rate_minus;
  const double g_diff = rate_plus - rate_minus;
  const double detune = d.gamma_m - g_diff;

  ResonantEstimate r;
  r.value = (detune * detune + omega * omega) / (2.0 * g_sum);
  r.outside_validity =
      std::abs(omega) >= 0.1 * std::min(d.gamma_plus, d.gamma_minus);
  return r;
}

SigmaWeights sigma_weights(const CoeffSet& c, Complex y) {
  const Complex mech = c.Gamma_m - kI * c.omega;
  return {(y - 0.5) * mech / c.A_plus, (y + 0.5) * mech / c.A_minus};
}

}  // namespace optotriplet
