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

#ifndef OPTOTRIPLET_PARAMS_IO_HPP_
#define OPTOTRIPLET_PARAMS_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "optotriplet/params.hpp"

namespace optotriplet {

// Flat JSON object whose keys are the PhysParams field names, SI units:
//
//   { "mass": 5e-11, "omega_m": 2199114.857, "quality_factor": 1e9,
//     "temperature": 20, "tau": 8.571e-5, "cavity_length": 0.1,
//     "wavelength": 1.55e-6, "gamma0": 227700, "gamma0_plus": 225423,
//     "gamma0_minus": 229977, "gamma_e": 2300, "gamma_e_plus": 2300,
//     "gamma_e_minus": 2300, "eps_plus": 1.03, "eps_minus": 0.97,
//     "power_in": 1e-6 }
//
// Optional keys: "central_width" ("half_loss" | "full_loss") and "tau" may
// also be the string "thirty_periods" or "printed". Unknown keys are
// errors. Missing keys are errors unless `preset_fallback` is set, in which
// case they take their Table 1 values.
PhysParams parse_config(std::string_view text, bool preset_fallback);

PhysParams load_config(const std::filesystem::path& path, bool preset_fallback);

// Serialise back to the same schema (all keys, round-trip exact).
std::string to_config_json(const PhysParams& p);

std::string to_json(const DerivedParams& d);

}  // namespace optotriplet

#endif  // OPTOTRIPLET_PARAMS_IO_HPP_
