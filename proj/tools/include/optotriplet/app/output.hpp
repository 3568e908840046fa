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

#ifndef OPTOTRIPLET_APP_OUTPUT_HPP_
#define OPTOTRIPLET_APP_OUTPUT_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "optotriplet/compare.hpp"
#include "optotriplet/sweep.hpp"

namespace optotriplet::app {

// %.17g
std::string format_number(double v);

// Writes to a sibling temporary and renames over the target.
void write_atomic(const std::filesystem::path& path, std::string_view content);

inline constexpr std::string_view kSpectrumHeader =
    "omega_rad_s,omega_tau_over_2pi,y_re,y_im,S_qu,S_T,S_f,S_SQL,R";

std::string spectrum_csv(const std::vector<SpectrumRecord>& records);

// omega_rad_s,analytic,estimate,z
std::string comparison_csv(const ComparisonReport& report);

}  // namespace optotriplet::app

#endif  // OPTOTRIPLET_APP_OUTPUT_HPP_
