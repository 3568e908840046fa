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

#include "optotriplet/app/scenario.hpp"

#include <algorithm>
#include <set>

#include "optotriplet/errors.hpp"

namespace optotriplet::app {
namespace {

Scenario make(std::string name, Symmetry sym, bool lossy, double pump, std::string caption) {
  Scenario s;
  s.name = std::move(name);
  s.symmetry = sym;
  s.lossy = lossy;
  s.pump = pump;
  s.caption = std::move(caption);
  return s;
}

std::vector<std::string> alias(std::string_view name) {
  if (name == "fig2") return {"fig2-sym", "fig2-nonsym", "fig2-nonsym-10P"};
  if (name == "fig3") {
    return {"fig3-nonsym-lossy", "fig3-nonsym-lossless", "fig3-nonsym-lossy-10P",
            "fig3-nonsym-lossless-10P"};
  }
  if (name == "fig4") {
    return {"fig4-sym-lossy", "fig4-sym-lossless", "fig4-sym-lossy-10P",
            "fig4-sym-lossless-10P"};
  }
  if (name == "all") {
    std::vector<std::string> out;
    for (const auto& s : preset_scenarios()) out.push_back(s.name);
    return out;
  }
  return {std::string(name)};
}

}  // namespace

Scenario config_scenario() {
  return make("config", Symmetry::kAsConfigured, true, 1.0, "parameters as loaded");
}

const std::vector<Scenario>& preset_scenarios() {
  static const std::vector<Scenario> presets = {
      make("fig2-sym", Symmetry::kSymmetric, false, 1.0, "symmetric, lossless"),
      make("fig2-nonsym", Symmetry::kAsConfigured, false, 1.0, "non-symmetric, lossless"),
      make("fig2-nonsym-10P", Symmetry::kAsConfigured, false, 10.0,
           "non-symmetric, lossless, 10x pump"),
      make("fig3-nonsym-lossy", Symmetry::kAsConfigured, true, 1.0, "non-symmetric, lossy"),
      make("fig3-nonsym-lossless", Symmetry::kAsConfigured, false, 1.0,
           "non-symmetric, lossless"),
      make("fig3-nonsym-lossy-10P", Symmetry::kAsConfigured, true, 10.0,
           "non-symmetric, lossy, 10x pump"),
      make("fig3-nonsym-lossless-10P", Symmetry::kAsConfigured, false, 10.0,
           "non-symmetric, lossless, 10x pump"),
      make("fig4-sym-lossy", Symmetry::kSymmetric, true, 1.0, "symmetric, lossy"),
      make("fig4-sym-lossless", Symmetry::kSymmetric, false, 1.0, "symmetric, lossless"),
      make("fig4-sym-lossy-10P", Symmetry::kSymmetric, true, 10.0,
           "symmetric, lossy, 10x pump"),
      make("fig4-sym-lossless-10P", Symmetry::kSymmetric, false, 10.0,
           "symmetric, lossless, 10x pump"),
  };
  return presets;
}

std::vector<Scenario> expand_scenarios(const std::vector<std::string>& names) {
  std::vector<Scenario> out;
  std::set<std::string> seen;
  for (const auto& raw : names) {
    for (const auto& name : alias(raw)) {
      if (!seen.insert(name).second) {
        throw ParameterError("scenario '" + name + "' requested more than once");
      }
      if (name == "config") {
        out.push_back(config_scenario());
        continue;
      }
      const auto& presets = preset_scenarios();
      const auto it = std::find_if(presets.begin(), presets.end(),
                                   [&](const Scenario& s) { return s.name == name; });
      if (it == presets.end()) throw ParameterError("unknown scenario '" + name + "'");
      out.push_back(*it);
    }
  }
  return out;
}

PhysParams apply(const Scenario& s, const PhysParams& base) {
  PhysParams p = base;
  if (s.symmetry == Symmetry::kSymmetric) {
    p.eps_plus = 1.0;
    p.eps_minus = 1.0;
    p.gamma0_plus = p.gamma0;
    p.gamma0_minus = p.gamma0;
    p.gamma_e_plus = p.gamma_e;
    p.gamma_e_minus = p.gamma_e;
  }
  if (!s.lossy) {
    p.gamma_e = 0.0;
    p.gamma_e_plus = 0.0;
    p.gamma_e_minus = 0.0;
  }
  p.power_in *= s.pump;
  return p;
}

GridSpec figure_grid(double tau) { return scaled_log_grid(tau, 0.2, 10.0, 400); }

}  // namespace optotriplet::app
