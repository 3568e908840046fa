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

#include "optotriplet/compare.hpp"

#include <algorithm>
#include <cmath>

#include "optotriplet/errors.hpp"

namespace optotriplet {
namespace {

double interpolate(std::span<const SpectrumRecord> a, double omega) {
  const auto it = std::lower_bound(
      a.begin(), a.end(), omega,
      [](const SpectrumRecord& r, double w) { return r.omega < w; });
  if (it != a.end() && std::abs(it->omega - omega) <= 1e-12 * omega) return it->s_f;
  if (it == a.begin() || it == a.end()) {
    throw ParameterError("estimate bin lies outside the analytic grid");
  }
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  if (lo.omega > 0.0 && lo.s_f > 0.0 && hi.s_f > 0.0) {
    const double t = std::log(omega / lo.omega) / std::log(hi.omega / lo.omega);
    return std::exp(std::log(lo.s_f) + t * (std::log(hi.s_f) - std::log(lo.s_f)));
  }
  const double t = (omega - lo.omega) / (hi.omega - lo.omega);
  return lo.s_f + t * (hi.s_f - lo.s_f);
}

}  // namespace

ComparisonReport compare(std::span<const SpectrumRecord> analytic,
                         const PsdEstimate& est, Band band,
                         const CompareOptions& options) {
  if (analytic.empty()) throw ParameterError("analytic spectrum is empty");
  if (!(band.hi > band.lo)) throw ParameterError("comparison band is empty");
  if (est.omega.size() != est.psd.size() || est.psd.size() != est.rel_error.size()) {
    throw ParameterError("malformed spectral estimate");
  }
  const Band usable{std::max({band.lo, analytic.front().omega, est.band.lo}),
                    std::min({band.hi, analytic.back().omega, est.band.hi})};
  if (!(usable.hi >= usable.lo)) {
    throw ParameterError("analytic, estimate and comparison bands are disjoint");
  }

  ComparisonReport rep;
  rep.band = usable;
  double ratio_sum = 0.0;
  double chi = 0.0;
  for (std::size_t k = 0; k < est.omega.size(); ++k) {
    const double w = est.omega[k];
    if (!usable.contains(w)) continue;
    const double s = interpolate(analytic, w);
    const double ratio = est.psd[k] / s;
    const double z = (ratio - 1.0) / est.rel_error[k];
    rep.omega.push_back(w);
    rep.analytic.push_back(s);
    rep.estimate.push_back(est.psd[k]);
    rep.z.push_back(z);
    ratio_sum += ratio;
    chi += z * z;
    if (std::abs(z) <= options.sigmas) ++rep.bins_within;
    rep.max_abs_z = std::max(rep.max_abs_z, std::abs(z));
    rep.max_relative_deviation = std::max(rep.max_relative_deviation, std::abs(ratio - 1.0));
  }
  rep.bins = rep.omega.size();
  if (rep.bins == 0) throw ParameterError("no estimate bins inside the comparison band");

  const double n = static_cast<double>(rep.bins);
  rep.fraction_within = static_cast<double>(rep.bins_within) / n;
  rep.mean_ratio = ratio_sum / n;
  rep.chi_square_per_bin = chi / n;
  rep.pass = rep.fraction_within >= options.required_fraction &&
             std::abs(rep.mean_ratio - 1.0) <= options.mean_tolerance;
  return rep;
}

}  // namespace optotriplet
