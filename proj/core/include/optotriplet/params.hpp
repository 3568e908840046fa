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

#ifndef OPTOTRIPLET_PARAMS_HPP_
#define OPTOTRIPLET_PARAMS_HPP_

#include <string>
#include <vector>

namespace optotriplet {

// How the central (pumped) mode half-width is assembled from its input
// coupling and loss rates.
enum class CentralWidthConvention {
  kHalfLoss,  // gamma = gamma0 + gamma_e / 2 (default)
  kFullLoss,  // gamma = gamma0 + gamma_e, same form as the sideband modes
};

// Physical constants of the oscillator, the optical triplet, the pump and
// the measurement window. SI units throughout; angular rates in rad/s.
struct PhysParams {
  double mass = 0.0;            // kg
  double omega_m = 0.0;         // mechanical angular frequency
  double quality_factor = 0.0;  // Q = omega_m / (2 gamma_m)
  double temperature = 0.0;     // K
  double tau = 0.0;             // signal force duration, s
  double cavity_length = 0.0;   // m
  double wavelength = 0.0;      // optical carrier, m

  double gamma0 = 0.0;          // central mode input coupling
  double gamma0_plus = 0.0;     // sideband input couplings
  double gamma0_minus = 0.0;
  double gamma_e = 0.0;         // central mode loss
  double gamma_e_plus = 0.0;    // sideband losses
  double gamma_e_minus = 0.0;

  double eps_plus = 1.0;        // coupling asymmetry multipliers on eta_nom
  double eps_minus = 1.0;
  double power_in = 0.0;        // pump power on the central mode, W

  CentralWidthConvention central_width = CentralWidthConvention::kHalfLoss;

  bool operator==(const PhysParams&) const = default;
};

// Quantities computed once from PhysParams. Everything downstream
// (spectra, optimizer, oracle, sqlimit) reads only this struct, so it can
// also be filled directly in rate units via from_rates().
struct DerivedParams {
  double mass = 0.0;
  double omega_m = 0.0;
  double tau = 0.0;

  double gamma_m = 0.0;  // omega_m / (2 Q)

  double gamma0_plus = 0.0;
  double gamma0_minus = 0.0;
  double gamma_e_plus = 0.0;
  double gamma_e_minus = 0.0;
  double gamma_plus = 0.0;   // gamma0_plus + gamma_e_plus
  double gamma_minus = 0.0;  // gamma0_minus + gamma_e_minus
  double gamma0 = 0.0;
  double gamma_e = 0.0;
  double gamma_central = 0.0;

  double x0 = 0.0;           // zero-point amplitude sqrt(hbar / (2 m omega_m))
  double omega0 = 0.0;       // optical carrier 2 pi c / lambda
  double eta_nominal = 0.0;  // omega0 x0 / L
  double eta_plus = 0.0;
  double eta_minus = 0.0;
  double photon_flux = 0.0;  // A0^2 = P_in / (hbar omega0), 1/s
  double c0_squared = 0.0;   // 2 A0^2 / gamma0

  double n_thermal = 0.0;
  double thermal_factor = 0.0;  // B = n_T omega_m tau / Q

  double c0() const;
  bool operator==(const DerivedParams&) const = default;
};

// Throws ParameterError naming the first offending field.
void validate(const PhysParams& p);

// Pure and deterministic; validates first.
DerivedParams derive(const PhysParams& p);

// Direct rate-unit description of the linear model, bypassing the SI
// constants. Couplings are the products eta_pm * C0; C0^2 is set to 1.
struct RateModel {
  double gamma_m = 0.0;
  double n_thermal = 0.0;
  double gamma0_plus = 0.0;
  double gamma0_minus = 0.0;
  double gamma_e_plus = 0.0;
  double gamma_e_minus = 0.0;
  double coupling_plus = 0.0;
  double coupling_minus = 0.0;
  double tau = 1.0;
};

DerivedParams from_rates(const RateModel& r);

// The two readings of the printed signal duration.
enum class TauChoice {
  kThirtyPeriods,  // tau = 30 * 2 pi / omega_m (default)
  kPrinted,        // 0.84e-3 s as printed next to it
};

inline constexpr double kPrintedTau = 0.84e-3;

double thirty_period_tau(double omega_m);

// Table 1 membrane/cavity parameters.
PhysParams table1_preset(TauChoice tau = TauChoice::kThirtyPeriods);

enum class Verdict { kPass, kMarginal, kFail };

const char* to_string(Verdict v);

// One "a << b" condition expressed as ratio = a / b.
struct RegimeCheck {
  std::string name;
  std::string condition;
  double ratio = 0.0;
  Verdict verdict = Verdict::kPass;
  double margin = 0.0;  // threshold / ratio; infinite when ratio == 0
};

inline constexpr double kMuchLessThreshold = 0.1;

struct RegimeReport {
  RegimeCheck loss_smallness;     // gamma_e / gamma0 for all three modes
  RegimeCheck resolved_sideband;  // optical width / omega_m
  RegimeCheck rate_hierarchy;     // gamma_m / optical width
  RegimeCheck thermal;            // B = n_T omega_m tau / Q
  RegimeCheck short_pulse;        // gamma_m tau
  double thermal_factor = 0.0;

  std::vector<const RegimeCheck*> checks() const;
};

// ratio < 0.1 passes, ratio < 1 is marginal, otherwise the condition
// fails. Never throws; the inputs are not modified.
RegimeReport check_regime(const DerivedParams& d, const PhysParams& p);

std::string format_report(const RegimeReport& report);

}  // namespace optotriplet

#endif  // OPTOTRIPLET_PARAMS_HPP_
