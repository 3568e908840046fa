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

#ifndef OPTOTRIPLET_COMPARE_HPP_
#define OPTOTRIPLET_COMPARE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "optotriplet/psd.hpp"
#include "optotriplet/sweep.hpp"

namespace optotriplet {

struct CompareOptions {
  double sigmas = 3.0;             // per-bin agreement window, in error bars
  double required_fraction = 0.95;
  double mean_tolerance = 0.05;    // |mean(estimate / analytic) - 1|
};

struct ComparisonReport {
  bool pass = false;
  Band band;
  std::size_t bins = 0;
  std::size_t bins_within = 0;
  double fraction_within = 0.0;
  double mean_ratio = 0.0;
  double max_abs_z = 0.0;              // largest |deviation| in error bars
  double max_relative_deviation = 0.0;
  double chi_square_per_bin = 0.0;
  std::vector<double> omega;
  std::vector<double> analytic;
  std::vector<double> estimate;
  std::vector<double> z;
};

// Analytic S_f is interpolated log-log onto the estimate's bins that fall in
// `band`. Throws ParameterError if the band, the analytic grid and the
// estimate do not overlap.
ComparisonReport compare(std::span<const SpectrumRecord> analytic,
                         const PsdEstimate& est, Band band,
                         const CompareOptions& options = {});

}  // namespace optotriplet

#endif  // OPTOTRIPLET_COMPARE_HPP_
