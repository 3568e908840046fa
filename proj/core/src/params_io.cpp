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

#include "optotriplet/params_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "optotriplet/errors.hpp"

namespace optotriplet {
namespace {

using nlohmann::json;

using Field = double PhysParams::*;

const std::map<std::string, Field>& numeric_fields() {
  static const std::map<std::string, Field> fields = {
      {"mass", &PhysParams::mass},
      {"omega_m", &PhysParams::omega_m},
      {"quality_factor", &PhysParams::quality_factor},
      {"temperature", &PhysParams::temperature},
      {"tau", &PhysParams::tau},
      {"cavity_length", &PhysParams::cavity_length},
      {"wavelength", &PhysParams::wavelength},
      {"gamma0", &PhysParams::gamma0},
      {"gamma0_plus", &PhysParams::gamma0_plus},
      {"gamma0_minus", &PhysParams::gamma0_minus},
      {"gamma_e", &PhysParams::gamma_e},
      {"gamma_e_plus", &PhysParams::gamma_e_plus},
      {"gamma_e_minus", &PhysParams::gamma_e_minus},
      {"eps_plus", &PhysParams::eps_plus},
      {"eps_minus", &PhysParams::eps_minus},
      {"power_in", &PhysParams::power_in},
  };
  return fields;
}

}  // namespace

PhysParams parse_config(std::string_view text, bool preset_fallback) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParameterError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParameterError("config must be a flat JSON object");

  PhysParams p = table1_preset();
  std::map<std::string, bool> seen;
  bool tau_is_symbolic = false;

  for (const auto& [key, value] : doc.items()) {
    if (key == "central_width") {
      if (!value.is_string()) {
        throw ParameterError("config key 'central_width' must be a string");
      }
      const auto s = value.get<std::string>();
      if (s == "half_loss") {
        p.central_width = CentralWidthConvention::kHalfLoss;
      } else if (s == "full_loss") {
        p.central_width = CentralWidthConvention::kFullLoss;
      } else {
        throw ParameterError("config key 'central_width' must be 'half_loss' or 'full_loss'");
      }
      continue;
    }
    const auto it = numeric_fields().find(key);
    if (it == numeric_fields().end()) {
      throw ParameterError("unknown config key '" + key + "'");
    }
    if (key == "tau" && value.is_string()) {
      tau_is_symbolic = true;
      const auto s = value.get<std::string>();
      if (s == "thirty_periods") {
        p.tau = -1.0;  // resolved below once omega_m is known
      } else if (s == "printed") {
        p.tau = kPrintedTau;
      } else {
        throw ParameterError("config key 'tau' must be a number, 'thirty_periods' or 'printed'");
      }
    } else if (value.is_number()) {
      p.*(it->second) = value.get<double>();
    } else {
      throw ParameterError("config key '" + key + "' must be a number");
    }
    seen[key] = true;
  }

  if (!preset_fallback) {
    for (const auto& [key, field] : numeric_fields()) {
      if (!seen.count(key)) {
        throw ParameterError("config is missing key '" + key +
                             "' (pass the table1 preset to fill defaults)");
      }
    }
  }
  if (tau_is_symbolic && p.tau < 0.0) p.tau = thirty_period_tau(p.omega_m);
  validate(p);
  return p;
}

PhysParams load_config(const std::filesystem::path& path, bool preset_fallback) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read config file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), preset_fallback);
}

std::string to_config_json(const PhysParams& p) {
  json doc = json::object();
  for (const auto& [key, field] : numeric_fields()) doc[key] = p.*field;
  doc["central_width"] = p.central_width == CentralWidthConvention::kHalfLoss
                             ? "half_loss"
                             : "full_loss";
  return doc.dump(2);
}

std::string to_json(const DerivedParams& d) {
  json doc = {
      {"gamma_m", d.gamma_m},
      {"gamma_plus", d.gamma_plus},
      {"gamma_minus", d.gamma_minus},
      {"gamma_central", d.gamma_central},
      {"x0", d.x0},
      {"omega0", d.omega0},
      {"eta_nominal", d.eta_nominal},
      {"eta_plus", d.eta_plus},
      {"eta_minus", d.eta_minus},
      {"photon_flux", d.photon_flux},
      {"c0_squared", d.c0_squared},
      {"n_thermal", d.n_thermal},
      {"thermal_factor", d.thermal_factor},
  };
  return doc.dump(2);
}

}  // namespace optotriplet
