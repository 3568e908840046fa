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

#ifndef OPTOTRIPLET_APP_SCENARIO_HPP_
#define OPTOTRIPLET_APP_SCENARIO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "optotriplet/grid.hpp"
#include "optotriplet/params.hpp"
#include "optotriplet/sweep.hpp"

namespace optotriplet::app {

enum class Symmetry { kAsConfigured, kSymmetric };

struct Scenario {
  std::string name;
  Symmetry symmetry = Symmetry::kAsConfigured;
  bool lossy = true;
  double pump = 1.0;  // multiplies power_in
  YPolicy y_policy = YPolicy::analytic_optimal();
  std::string caption;
};

// Scenario named "config": the loaded parameters untouched.
Scenario config_scenario();

const std::vector<Scenario>& preset_scenarios();

// Expands "fig2", "fig3", "fig4" and "all"; rejects unknown and repeated
// names with ParameterError.
std::vector<Scenario> expand_scenarios(const std::vector<std::string>& names);

// Symmetric: eps+- = 1, gamma0+- = gamma0, gamma_e+- = gamma_e.
// Lossless: every gamma_e set to zero. Pump scales power_in.
PhysParams apply(const Scenario& s, const PhysParams& base);

// 400 log points over Omega tau / (2 pi) in [0.2, 10].
GridSpec figure_grid(double tau);

}  // namespace optotriplet::app

#endif  // OPTOTRIPLET_APP_SCENARIO_HPP_
