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

#ifndef OPTOTRIPLET_GRID_HPP_
#define OPTOTRIPLET_GRID_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace optotriplet {

enum class GridKind { kLog, kLinear };

// Spectral-frequency grid in rad/s.
struct GridSpec {
  GridKind kind = GridKind::kLog;
  std::size_t points = 400;
  double lo = 0.0;
  double hi = 0.0;

  std::vector<double> build() const;
};

// Parses "log:N:lo:hi" or "linear:N:lo:hi" (lo, hi in rad/s).
GridSpec parse_grid_spec(std::string_view text);
std::string to_string(const GridSpec& g);

// 400 log-spaced points over [2 pi / (100 tau), 2 pi * 10 / tau].
GridSpec default_grid(double tau);

// Log grid expressed on the dimensionless axis Omega tau / (2 pi).
GridSpec scaled_log_grid(double tau, double lo_scaled, double hi_scaled,
                         std::size_t points);

std::vector<double> log_grid(double lo, double hi, std::size_t n);
std::vector<double> linear_grid(double lo, double hi, std::size_t n);

}  // namespace optotriplet

#endif  // OPTOTRIPLET_GRID_HPP_
