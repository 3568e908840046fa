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

#ifndef OPTOTRIPLET_CONSTANTS_HPP_
#define OPTOTRIPLET_CONSTANTS_HPP_

#include <numbers>

namespace optotriplet::constants {

// CODATA 2018 exact / recommended values.
inline constexpr double kHbar = 1.054571817e-34;       // J s
inline constexpr double kBoltzmann = 1.380649e-23;     // J / K
inline constexpr double kSpeedOfLight = 299792458.0;   // m / s

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace optotriplet::constants

#endif  // OPTOTRIPLET_CONSTANTS_HPP_
