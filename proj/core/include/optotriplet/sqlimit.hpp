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

#ifndef OPTOTRIPLET_SQLIMIT_HPP_
#define OPTOTRIPLET_SQLIMIT_HPP_

#include "optotriplet/params.hpp"

namespace optotriplet {

// Force-normalised noise of a plain (single-quadrature) position readout
// with measurement strength K:
//   S_fa = 2 gamma_m (n_T + 1/2) + (gamma_m^2 + Omega^2) / K + K.
// Throws ParameterError for K <= 0.
double s_fa(double strength, double gamma_m, double n_thermal, double omega);

// K that minimises s_fa at fixed Omega: sqrt(gamma_m^2 + Omega^2).
double optimal_strength(double gamma_m, double omega);

// Minimum detectable amplitude of a resonant square force pulse of length
// tau. Normalised terms are in units of f_sa^2 = F_s0^2 / (4 hbar m omega_m).
struct ForceBudget {
  double tau = 0.0;
  double thermal_term = 0.0;  // 2 gamma_m (n_T + 1/2) / tau
  double sql_term = 0.0;      // (2 / sqrt 3)(2 pi / tau^2)
  double total = 0.0;         // thermal_term + sql_term
  double min_normalized_force = 0.0;  // sqrt(total) = min f_sa
  double force_min = 0.0;             // F_s0, N
  double force_sql = 0.0;             // (4 / tau) sqrt(pi hbar m omega_m / sqrt 3), N
  double force_alternate = 0.0;       // same with 4 pi / tau^2 as quantum term, N
  // The quantum term drops gamma_m^2 next to (2 pi / tau)^2 / 3; it is only
  // meaningful for gamma_m tau << 1.
  bool short_pulse = true;
};

// Throws ParameterError for tau <= 0.
ForceBudget min_force(const DerivedParams& d, double tau);

// Band-integral consistency check: numeric integral of s_fa over
// [0, 2 pi / tau] with measure dOmega / 2 pi versus the closed form
//   (1/tau) [2 gamma_m (n_T + 1/2) + (gamma_m^2 + (1/3)(2 pi / tau)^2) / K + K].
struct BandIntegral {
  double numeric = 0.0;
  double closed_form = 0.0;
  double relative_difference = 0.0;
  double error_estimate = 0.0;  // quadrature's own error estimate
};

// Throws NumericalError if the quadrature misses 1e-6 relative agreement.
BandIntegral band_integral_check(double strength, double gamma_m,
                                 double n_thermal, double tau);
BandIntegral band_integral_check(const DerivedParams& d, double strength,
                                 double tau);

}  // namespace optotriplet

#endif  // OPTOTRIPLET_SQLIMIT_HPP_
