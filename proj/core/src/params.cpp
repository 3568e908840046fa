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

#include "optotriplet/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "optotriplet/constants.hpp"
#include "optotriplet/errors.hpp"

namespace optotriplet {
namespace {

using constants::kBoltzmann;
using constants::kHbar;
using constants::kSpeedOfLight;
using constants::kTwoPi;

void require_positive(double v, const char* field) {
  if (!std::isfinite(v) || v <= 0.0) {
    std::ostringstream msg;
    msg << "parameter '" << field << "' must be positive and finite, got " << v;
    throw ParameterError(msg.str());
  }
}

void require_non_negative(double v, const char* field) {
  if (!std::isfinite(v) || v < 0.0) {
    std::ostringstream msg;
    msg << "parameter '" << field << "' must be non-negative and finite, got "
        << v;
    throw ParameterError(msg.str());
  }
}

double bose_occupation(double energy_ratio) {
  // 1 / (exp(x) - 1); expm1 keeps full precision for x << 1.
  if (std::isinf(energy_ratio)) return 0.0;
  return 1.0 / std::expm1(energy_ratio);
}

Verdict classify(double ratio) {
  if (ratio < kMuchLessThreshold) return Verdict::kPass;
  if (ratio < 1.0) return Verdict::kMarginal;
  return Verdict::kFail;
}

RegimeCheck make_check(std::string name, std::string condition, double ratio) {
  RegimeCheck c;
  c.name = std::move(name);
  c.condition = std::move(condition);
  c.ratio = ratio;
  c.verdict = classify(ratio);
  c.margin = ratio == 0.0 ? std::numeric_limits<double>::infinity()
                          : kMuchLessThreshold / ratio;
  return c;
}

}  // namespace

double DerivedParams::c0() const { return std::sqrt(c0_squared); }

void validate(const PhysParams& p) {
  require_positive(p.mass, "mass");
  require_positive(p.omega_m, "omega_m");
  require_positive(p.quality_factor, "quality_factor");
  if (p.quality_factor < 1.0) {
    throw ParameterError("parameter 'quality_factor' must be >= 1");
  }
  require_non_negative(p.temperature, "temperature");
  require_positive(p.tau, "tau");
  require_positive(p.cavity_length, "cavity_length");
  require_positive(p.wavelength, "wavelength");
  require_positive(p.gamma0, "gamma0");
  require_positive(p.gamma0_plus, "gamma0_plus");
  require_positive(p.gamma0_minus, "gamma0_minus");
  require_non_negative(p.gamma_e, "gamma_e");
  require_non_negative(p.gamma_e_plus, "gamma_e_plus");
  require_non_negative(p.gamma_e_minus, "gamma_e_minus");
  require_positive(p.eps_plus, "eps_plus");
  require_positive(p.eps_minus, "eps_minus");
  if (p.eps_plus >= 2.0) throw ParameterError("parameter 'eps_plus' must lie in (0, 2)");
  if (p.eps_minus >= 2.0) throw ParameterError("parameter 'eps_minus' must lie in (0, 2)");
  require_positive(p.power_in, "power_in");
}

DerivedParams derive(const PhysParams& p) {
  validate(p);

  DerivedParams d;
  d.mass = p.mass;
  d.omega_m = p.omega_m;
  d.tau = p.tau;
  d.gamma_m = p.omega_m / (2.0 * p.quality_factor);

  d.gamma0_plus = p.gamma0_plus;
  d.gamma0_minus = p.gamma0_minus;
  d.gamma_e_plus = p.gamma_e_plus;
  d.gamma_e_minus = p.gamma_e_minus;
  d.gamma_plus = p.gamma0_plus + p.gamma_e_plus;
  d.gamma_minus = p.gamma0_minus + p.gamma_e_minus;
  d.gamma0 = p.gamma0;
  d.gamma_e = p.gamma_e;
  d.gamma_central = p.central_width == CentralWidthConvention::kHalfLoss
                        ? p.gamma0 + 0.5 * p.gamma_e
                        : p.gamma0 + p.gamma_e;

  d.x0 = std::sqrt(kHbar / (2.0 * p.mass * p.omega_m));
  d.omega0 = kTwoPi * kSpeedOfLight / p.wavelength;
  d.eta_nominal = d.omega0 * d.x0 / p.cavity_length;
  d.eta_plus = p.eps_plus * d.eta_nominal;
  d.eta_minus = p.eps_minus * d.eta_nominal;
  d.photon_flux = p.power_in / (kHbar * d.omega0);
  d.c0_squared = 2.0 * d.photon_flux / p.gamma0;

  d.n_thermal = p.temperature == 0.0
                    ? 0.0
                    : bose_occupation(kHbar * p.omega_m /
                                      (kBoltzmann * p.temperature));
  d.thermal_factor = d.n_thermal * p.omega_m * p.tau / p.quality_factor;

  const double derived_rates[] = {d.gamma_m, d.gamma_plus, d.gamma_minus,
                                  d.gamma_central, d.eta_plus, d.eta_minus,
                                  d.c0_squared};
  for (double r : derived_rates) {
    if (!std::isfinite(r) || r <= 0.0) {
      throw NumericalError("derived rate is not positive and finite");
    }
  }
  return d;
}

DerivedParams from_rates(const RateModel& r) {
  require_positive(r.gamma_m, "gamma_m");
  require_non_negative(r.n_thermal, "n_thermal");
  require_positive(r.gamma0_plus, "gamma0_plus");
  require_positive(r.gamma0_minus, "gamma0_minus");
  require_non_negative(r.gamma_e_plus, "gamma_e_plus");
  require_non_negative(r.gamma_e_minus, "gamma_e_minus");
  require_positive(r.coupling_plus, "coupling_plus");
  require_positive(r.coupling_minus, "coupling_minus");
  require_positive(r.tau, "tau");

  DerivedParams d;
  d.mass = 1.0;
  d.omega_m = 0.0;
  d.tau = r.tau;
  d.gamma_m = r.gamma_m;
  d.gamma0_plus = r.gamma0_plus;
  d.gamma0_minus = r.gamma0_minus;
  d.gamma_e_plus = r.gamma_e_plus;
  d.gamma_e_minus = r.gamma_e_minus;
  d.gamma_plus = r.gamma0_plus + r.gamma_e_plus;
  d.gamma_minus = r.gamma0_minus + r.gamma_e_minus;
  d.gamma0 = 0.5 * (r.gamma0_plus + r.gamma0_minus);
  d.gamma_central = d.gamma0;
  d.eta_plus = r.coupling_plus;
  d.eta_minus = r.coupling_minus;
  d.eta_nominal = 0.5 * (r.coupling_plus + r.coupling_minus);
  d.c0_squared = 1.0;
  d.n_thermal = r.n_thermal;
  return d;
}

double thirty_period_tau(double omega_m) { return 30.0 * kTwoPi / omega_m; }

PhysParams table1_preset(TauChoice tau) {
  PhysParams p;
  p.mass = 50e-9 * 1e-3;  // 50 ng
  p.omega_m = kTwoPi * 350e3;
  p.quality_factor = 1e9;
  p.temperature = 20.0;
  p.tau = tau == TauChoice::kThirtyPeriods ? thirty_period_tau(p.omega_m)
                                           : kPrintedTau;
  p.cavity_length = 0.1;
  p.wavelength = 1.55e-6;

  const double bandwidth = 2.3e5;  // gamma0 + gamma_e
  p.gamma_e = 2.3e3;
  p.gamma_e_plus = 2.3e3;
  p.gamma_e_minus = 2.3e3;
  p.gamma0 = bandwidth - p.gamma_e;
  p.gamma0_plus = (1.0 - 0.01) * p.gamma0;
  p.gamma0_minus = (1.0 + 0.01) * p.gamma0;

  p.eps_plus = 1.0 + 0.03;
  p.eps_minus = 1.0 - 0.03;
  p.power_in = 1e-6;
  return p;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kMarginal:
      return "marginal-pass";
    case Verdict::kFail:
      return "fail";
  }
  return "?";
}

std::vector<const RegimeCheck*> RegimeReport::checks() const {
  return {&loss_smallness, &resolved_sideband, &rate_hierarchy, &thermal,
          &short_pulse};
}

RegimeReport check_regime(const DerivedParams& d, const PhysParams& p) {
  RegimeReport r;
  const double loss_ratio =
      std::max({p.gamma_e / p.gamma0, p.gamma_e_plus / p.gamma0_plus,
                p.gamma_e_minus / p.gamma0_minus});
  r.loss_smallness =
      make_check("loss smallness", "gamma_e, gamma_e+- << gamma0, gamma0+-",
                 loss_ratio);

  const double widest = std::max({d.gamma_central, d.gamma_plus, d.gamma_minus});
  const double narrowest =
      std::min({d.gamma_central, d.gamma_plus, d.gamma_minus});
  r.resolved_sideband = make_check("resolved sideband",
                                   "gamma, gamma+- << omega_m", widest / p.omega_m);
  r.rate_hierarchy =
      make_check("mechanical/optical rates", "gamma_m << gamma, gamma+-",
                 d.gamma_m / narrowest);

  r.thermal_factor = d.n_thermal * p.omega_m * p.tau / p.quality_factor;
  r.thermal = make_check("thermal noise below SQL",
                         "B = n_T omega_m tau / Q << 1", r.thermal_factor);
  r.short_pulse = make_check("short pulse", "gamma_m tau << 1", d.gamma_m * p.tau);
  return r;
}

std::string format_report(const RegimeReport& report) {
  std::ostringstream out;
  out.precision(6);
  out << "regime report\n";
  out << "  thermal factor B = " << report.thermal_factor << "\n";
  for (const RegimeCheck* c : report.checks()) {
    out << "  " << c->name << " [" << c->condition << "]: ratio = " << c->ratio
        << ", margin = ";
    if (std::isinf(c->margin)) {
      out << "\u221e";
    } else {
      out << c->margin;
    }
    out << " -> " << to_string(c->verdict) << "\n";
  }
  return out.str();
}

}  // namespace optotriplet
