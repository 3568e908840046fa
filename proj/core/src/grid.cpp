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

#include "optotriplet/grid.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "optotriplet/constants.hpp"
#include "optotriplet/errors.hpp"

namespace optotriplet {
namespace {

template <typename T>
T parse_number(std::string_view s, const char* what) {
  T value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParameterError(std::string("grid spec: cannot parse ") + what +
                         " from '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
    throw ParameterError("log grid needs 0 < lo <= hi");
  }
  std::vector<double> g(n);
  if (n == 1) {
    g[0] = lo;
    return g;
  }
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = std::exp(a + step * static_cast<double>(i));
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo) {
    throw ParameterError("linear grid needs finite lo <= hi");
  }
  std::vector<double> g(n);
  if (n == 1) {
    g[0] = lo;
    return g;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = lo + step * static_cast<double>(i);
  g.back() = hi;
  return g;
}

std::vector<double> GridSpec::build() const {
  return kind == GridKind::kLog ? log_grid(lo, hi, points)
                                : linear_grid(lo, hi, points);
}

GridSpec parse_grid_spec(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 4) {
    throw ParameterError("grid spec must look like log:N:lo:hi or linear:N:lo:hi");
  }
  GridSpec g;
  if (parts[0] == "log") {
    g.kind = GridKind::kLog;
  } else if (parts[0] == "linear") {
    g.kind = GridKind::kLinear;
  } else {
    throw ParameterError("grid kind must be 'log' or 'linear'");
  }
  g.points = parse_number<std::size_t>(parts[1], "point count");
  g.lo = parse_number<double>(parts[2], "lower bound");
  g.hi = parse_number<double>(parts[3], "upper bound");
  if (g.kind == GridKind::kLog && !(g.lo > 0.0)) {
    throw ParameterError("log grid lower bound must be positive");
  }
  if (!(g.hi > g.lo)) throw ParameterError("grid upper bound must exceed lower bound");
  return g;
}

std::string to_string(const GridSpec& g) {
  std::ostringstream out;
  out.precision(17);
  out << (g.kind == GridKind::kLog ? "log" : "linear") << ':' << g.points << ':'
      << g.lo << ':' << g.hi;
  return out.str();
}

GridSpec default_grid(double tau) {
  return GridSpec{GridKind::kLog, 400, constants::kTwoPi / (100.0 * tau),
                  constants::kTwoPi * 10.0 / tau};
}

GridSpec scaled_log_grid(double tau, double lo_scaled, double hi_scaled,
                         std::size_t points) {
  return GridSpec{GridKind::kLog, points, constants::kTwoPi * lo_scaled / tau,
                  constants::kTwoPi * hi_scaled / tau};
}

}  // namespace optotriplet
