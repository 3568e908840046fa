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

#ifndef OPTOTRIPLET_SPECTRA_HPP_
#define OPTOTRIPLET_SPECTRA_HPP_

#include <complex>

#include "optotriplet/params.hpp"

namespace optotriplet {

using Complex = std::complex<double>;

// Per-frequency coefficient bundle of the amplitude-quadrature readout.
//
// With Omega the spectral frequency (Fourier kernel exp(-i Omega t)):
//   G       = [eta+^2 / (gamma+ - i Omega) - eta-^2 / (gamma- - i Omega)] C0^2
//   Gamma_m = gamma_m + G
//   A+-     = sqrt(2 gamma0+-) eta+- C0 / (gamma+- - i Omega)
//   B+-     = (gamma0+- - gamma_e+- + i Omega)(Gamma_m - i Omega)
//             / (sqrt(2 gamma0+-) eta+- C0)
//   Be+-    = sqrt(2 gamma0+-)(Gamma_m - i Omega) / (eta+- C0)
//   Y+- = A+- / B+-,  Ye+- = A+- / Be+-
//   xi+-    = (gamma0+- - gamma_e+- + i Omega) / (gamma0+- + gamma_e+- - i Omega)
//   mu+-    = 2 sqrt(gamma0+- gamma_e+-) / (gamma0+- + gamma_e+- - i Omega)
struct CoeffSet {
  double omega = 0.0;
  Complex G;
  Complex Gamma_m;
  Complex A_plus, A_minus;
  Complex B_plus, B_minus;
  Complex Be_plus, Be_minus;
  Complex Y_plus, Y_minus;
  Complex Ye_plus, Ye_minus;
  Complex xi_plus, xi_minus;
  Complex mu_plus, mu_minus;
  double loss_ratio_plus = 0.0;   // gamma_e+ / gamma0+
  double loss_ratio_minus = 0.0;  // gamma_e- / gamma0-
};

Complex optical_damping(const DerivedParams& d, double omega);

// Throws ParameterError when eta+- C0 vanishes or Omega is not finite.
CoeffSet coeffs(const DerivedParams& d, double omega);

// Quantum part of the force-normalised noise for post-processing weight y:
//   |B+|^2 |y - 1/2 + Y+|^2 + |B-|^2 |y + 1/2 + Y-|^2
//   + (gamma_e+/gamma0+) |Be+|^2 |y - 1/2 + Ye+|^2
//   + (gamma_e-/gamma0-) |Be-|^2 |y + 1/2 + Ye-|^2
double s_qu(const CoeffSet& c, Complex y);

// 2 gamma_m (n_T + 1/2), frequency independent.
double s_thermal(const DerivedParams& d);

// 2 sqrt(gamma_m^2 + Omega^2).
double s_sql(double gamma_m, double omega);

// Measurement strength sum_pm 2 gamma+- eta+-^2 C0^2 / (gamma+-^2 + Omega^2).
// In the symmetric case this is K = 4 gamma eta^2 C0^2 / (gamma^2 + Omega^2).
double measurement_strength(const DerivedParams& d, double omega);

// (gamma_m^2 + Omega^2) / K for symmetric lossless parameters; throws
// ParameterError otherwise.
double s_qu_sym_lossless(const DerivedParams& d, double omega);

struct ResonantEstimate {
  double value = 0.0;
  // |Omega| >= 0.1 min(gamma+, gamma-): the gamma+- >> Omega expansion is
  // being used outside its range.
  bool outside_validity = false;
};

// Nearly-resonant lossless form (1 / (2 G+)) ((gamma_m - G)^2 + Omega^2) with
// G+ = eta+^2 C0^2/gamma+ + eta-^2 C0^2/gamma-, G = eta+^2 C0^2/gamma+ -
// eta-^2 C0^2/gamma-. Throws ParameterError for lossy inputs.
ResonantEstimate s_qu_nonsym_resonant(const DerivedParams& d, double omega);

// Weights applied to the detected output quadratures so that
// Sigma = plus * b+a + minus * b-a carries the signal with unit coefficient:
//   plus  = (y - 1/2)(Gamma_m - i Omega) / A+
//   minus = (y + 1/2)(Gamma_m - i Omega) / A-
struct SigmaWeights {
  Complex plus;
  Complex minus;
};

SigmaWeights sigma_weights(const CoeffSet& c, Complex y);

bool is_lossless(const DerivedParams& d);
bool is_symmetric(const DerivedParams& d);

}  // namespace optotriplet

#endif  // OPTOTRIPLET_SPECTRA_HPP_
