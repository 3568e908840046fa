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

#include "optotriplet/sqlimit.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "optotriplet/constants.hpp"
#include "optotriplet/errors.hpp"

namespace optotriplet {
namespace {

using constants::kHbar;
using constants::kPi;
using constants::kTwoPi;

constexpr double kBandTolerance = 1e-6;

}  // namespace

double s_fa(double strength, double gamma_m, double n_thermal, double omega) {
  if (!(strength > 0.0)) throw ParameterError("measurement strength K must be positive");
  return 2.0 * gamma_m * (n_thermal + 0.5) +
         (gamma_m * gamma_m + omega * omega) / strength + strength;
}

double optimal_strength(double gamma_m, double omega) {
  return std::hypot(gamma_m, omega);
}

ForceBudget min_force(const DerivedParams& d, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw ParameterError("force duration tau must be positive");
  }
  ForceBudget b;
  b.tau = tau;
  b.thermal_term = 2.0 * d.gamma_m * (d.n_thermal + 0.5) / tau;
  b.sql_term = (2.0 / std::sqrt(3.0)) * kTwoPi / (tau * tau);
  b.total = b.thermal_term + b.sql_term;
  b.min_normalized_force = std::sqrt(b.total);

  const double scale = 4.0 * kHbar * d.mass * d.omega_m;  // F_s0^2 = scale * f_sa^2
  b.force_min = std::sqrt(scale * b.total);
  b.force_sql = (4.0 / tau) * std::sqrt(kPi * kHbar * d.mass * d.omega_m / std::sqrt(3.0));
  b.force_alternate = std::sqrt(scale * (b.thermal_term + 4.0 * kPi / (tau * tau)));
  b.short_pulse = d.gamma_m * tau < 1.0;
  return b;
}

BandIntegral band_integral_check(double strength, double gamma_m,
                                 double n_thermal, double tau) {
  if (!(tau > 0.0)) throw ParameterError("force duration tau must be positive");
  if (!(strength > 0.0)) throw ParameterError("measurement strength K must be positive");

  const double band = kTwoPi / tau;
  const auto integrand = [&](double omega) {
    return s_fa(strength, gamma_m, n_thermal, omega) / kTwoPi;
  };

  BandIntegral r;
  double error = 0.0;
  r.numeric = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, 0.0, band, 10, 1e-12, &error);
  r.error_estimate = error;
  r.closed_form = (2.0 * gamma_m * (n_thermal + 0.5) +
                   (gamma_m * gamma_m + band * band / 3.0) / strength + strength) /
                  tau;
  r.relative_difference = std::abs(r.numeric - r.closed_form) / std::abs(r.closed_form);
  if (!std::isfinite(r.numeric) || r.relative_difference > kBandTolerance) {
    throw NumericalError("band integral quadrature disagrees with the closed form");
  }
  return r;
}

BandIntegral band_integral_check(const DerivedParams& d, double strength,
                                 double tau) {
  return band_integral_check(strength, d.gamma_m, d.n_thermal, tau);
}

}  // namespace optotriplet
