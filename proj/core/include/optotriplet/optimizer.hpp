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

#ifndef OPTOTRIPLET_OPTIMIZER_HPP_
#define OPTOTRIPLET_OPTIMIZER_HPP_

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "optotriplet/spectra.hpp"

namespace optotriplet {

// Exact minimiser of s_qu over the single complex post-processing weight y.
// s_qu is a sum of weighted squared distances |y - c_j|^2, so the optimum is
// the weighted centroid
//   y_opt = (|B+|^2 / BB^2)(1/2 - Y+) - (|B-|^2 / BB^2)(1/2 + Y-) + Delta_e,
//   BB^2  = |B+|^2 + |B-|^2 + BBe^2,
//   BBe^2 = (gamma_e+/gamma0+)|Be+|^2 + (gamma_e-/gamma0-)|Be-|^2,
//   Delta_e = (gamma_e+/gamma0+)(|Be+|^2 / BB^2)(1/2 - Ye+)
//           - (gamma_e-/gamma0-)(|Be-|^2 / BB^2)(1/2 + Ye-).
// Throws NumericalError when BB^2 == 0.
Complex y_opt_analytic(const CoeffSet& c);

// Nelder-Mead constants. The search is deterministic; no random restarts.
struct SimplexSettings {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  int max_iterations = 10000;
  // Edge of the initial right-angled simplex; 0 means "use tol".
  double initial_step = 0.0;
};

struct SimplexResult {
  std::array<double, 2> x{};
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Derivative-free minimisation of f(x0, x1). Converged once the simplex
// diameter (largest vertex distance) drops below tol.
SimplexResult nelder_mead_2d(const std::function<double(double, double)>& f,
                             std::array<double, 2> start, double tol,
                             const SimplexSettings& settings = {});

struct OptResult {
  double omega = 0.0;
  Complex y_analytic;
  Complex y_numeric;
  double s_analytic = 0.0;
  double s_numeric = 0.0;
  double relative_gap = 0.0;  // |s_analytic - s_numeric| / s_analytic
  int iterations = 0;
  bool converged = false;     // false: max iterations hit, result flagged
};

// Runs the simplex over (Re y, Im y) from `init` and records it next to the
// analytic optimum. Non-convergence is reported, not thrown.
OptResult y_opt_numeric(const CoeffSet& c, Complex init, double tol,
                        const SimplexSettings& settings = {});

// Both optimisers at every grid point, started from y = 0. The simplex
// tolerance is tol * max(1, |Y+|, |Y-|, |Ye+|, |Ye-|) so that it tracks the
// scale of the back-action terms.
std::vector<OptResult> optimal_sweep(const DerivedParams& d,
                                     std::span<const double> grid,
                                     double tol = 1e-8);

}  // namespace optotriplet

#endif  // OPTOTRIPLET_OPTIMIZER_HPP_
