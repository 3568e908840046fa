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

#ifndef OPTOTRIPLET_TESTS_SUPPORT_RANDOM_PARAMS_HPP_
#define OPTOTRIPLET_TESTS_SUPPORT_RANDOM_PARAMS_HPP_

#include <cmath>
#include <random>

#include "optotriplet/params.hpp"

namespace optotriplet::testing {

inline double log_uniform(std::mt19937_64& gen, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(gen));
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

// Table 1 with every asymmetry and loss knob drawn at random.
inline PhysParams random_phys(std::mt19937_64& gen, bool lossy) {
  PhysParams p = table1_preset();
  p.quality_factor = log_uniform(gen, 1e4, 1e10);
  p.temperature = uniform(gen, 0.0, 300.0);
  p.gamma0 = log_uniform(gen, 1e4, 1e6);
  p.gamma0_plus = p.gamma0 * uniform(gen, 0.5, 1.5);
  p.gamma0_minus = p.gamma0 * uniform(gen, 0.5, 1.5);
  p.eps_plus = uniform(gen, 0.5, 1.5);
  p.eps_minus = uniform(gen, 0.5, 1.5);
  p.power_in = log_uniform(gen, 1e-8, 1e-4);
  if (lossy) {
    p.gamma_e = p.gamma0 * uniform(gen, 1e-3, 0.2);
    p.gamma_e_plus = p.gamma0_plus * uniform(gen, 1e-3, 0.2);
    p.gamma_e_minus = p.gamma0_minus * uniform(gen, 1e-3, 0.2);
  } else {
    p.gamma_e = p.gamma_e_plus = p.gamma_e_minus = 0.0;
  }
  return p;
}

inline PhysParams symmetric_lossless_table1() {
  PhysParams p = table1_preset();
  p.eps_plus = p.eps_minus = 1.0;
  p.gamma0_plus = p.gamma0_minus = p.gamma0;
  p.gamma_e = p.gamma_e_plus = p.gamma_e_minus = 0.0;
  return p;
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace optotriplet::testing

#endif  // OPTOTRIPLET_TESTS_SUPPORT_RANDOM_PARAMS_HPP_
