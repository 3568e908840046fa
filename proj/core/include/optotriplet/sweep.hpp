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

#ifndef OPTOTRIPLET_SWEEP_HPP_
#define OPTOTRIPLET_SWEEP_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "optotriplet/spectra.hpp"

namespace optotriplet {

// Which post-processing weight y a sweep uses at each frequency.
class YPolicy {
 public:
  enum class Kind { kAnalyticOptimal, kFixed, kTable };

  static YPolicy analytic_optimal();
  static YPolicy fixed(Complex y);
  // One value per grid point, in grid order.
  static YPolicy table(std::vector<Complex> values);

  Kind kind() const { return kind_; }
  Complex resolve(const CoeffSet& c, std::size_t index) const;
  std::string describe() const;

 private:
  YPolicy(Kind kind, Complex fixed, std::vector<Complex> table)
      : kind_(kind), fixed_(fixed), table_(std::move(table)) {}

  Kind kind_;
  Complex fixed_;
  std::vector<Complex> table_;
};

struct SpectrumRecord {
  double omega = 0.0;         // rad/s
  double omega_scaled = 0.0;  // Omega tau / (2 pi)
  Complex y;                  // weight actually used
  double s_qu = 0.0;
  double s_thermal = 0.0;
  double s_f = 0.0;           // s_qu + s_thermal
  double s_sql = 0.0;
  double ratio = 0.0;         // s_qu / s_sql
  std::string scenario;
};

// One record per grid point. The grid must be finite and strictly
// increasing; coefficient errors are re-thrown with the offending Omega.
std::vector<SpectrumRecord> spectrum_sweep(const DerivedParams& d,
                                           std::span<const double> grid,
                                           const YPolicy& policy,
                                           std::string_view scenario = {});

}  // namespace optotriplet

#endif  // OPTOTRIPLET_SWEEP_HPP_
