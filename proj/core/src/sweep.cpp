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

#include "optotriplet/sweep.hpp"

#include <cmath>
#include <sstream>

#include "at_frequency.hpp"
#include "optotriplet/constants.hpp"
#include "optotriplet/errors.hpp"
#include "optotriplet/optimizer.hpp"

namespace optotriplet {

YPolicy YPolicy::analytic_optimal() { return YPolicy(Kind::kAnalyticOptimal, {}, {}); }

YPolicy YPolicy::fixed(Complex y) { return YPolicy(Kind::kFixed, y, {}); }

YPolicy YPolicy::table(std::vector<Complex> values) {
  return YPolicy(Kind::kTable, {}, std::move(values));
}

Complex YPolicy::resolve(const CoeffSet& c, std::size_t index) const {
  switch (kind_) {
    case Kind::kAnalyticOptimal:
      return y_opt_analytic(c);
    case Kind::kFixed:
      return fixed_;
    case Kind::kTable:
      if (index >= table_.size()) {
        throw ParameterError("y table is shorter than the frequency grid");
      }
      return table_[index];
  }
  return fixed_;
}

std::string YPolicy::describe() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind_) {
    case Kind::kAnalyticOptimal:
      out << "analytic-optimal";
      break;
    case Kind::kFixed:
      out << "fixed:" << fixed_.real() << ':' << fixed_.imag();
      break;
    case Kind::kTable:
      out << "table[" << table_.size() << ']';
      break;
  }
  return out.str();
}

std::vector<SpectrumRecord> spectrum_sweep(const DerivedParams& d,
                                           std::span<const double> grid,
                                           const YPolicy& policy,
                                           std::string_view scenario) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) throw ParameterError("frequency grid contains a non-finite value");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw ParameterError("frequency grid must be strictly increasing");
    }
  }
  if (policy.kind() == YPolicy::Kind::kTable) {
    // resolve() checks the index, but a size mismatch is a usage error up front
    if (grid.size() > 0) policy.resolve(CoeffSet{}, grid.size() - 1);
  }

  const double thermal = s_thermal(d);
  std::vector<SpectrumRecord> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double omega = grid[i];
    out.push_back(detail::at_frequency(omega, [&] {
      const CoeffSet c = coeffs(d, omega);
      SpectrumRecord r;
      r.omega = omega;
      r.omega_scaled = omega * d.tau / constants::kTwoPi;
      r.y = policy.resolve(c, i);
      r.s_qu = s_qu(c, r.y);
      r.s_thermal = thermal;
      r.s_f = r.s_qu + r.s_thermal;
      r.s_sql = s_sql(d.gamma_m, omega);
      r.ratio = r.s_qu / r.s_sql;
      r.scenario = std::string(scenario);
      return r;
    }));
  }
  return out;
}

}  // namespace optotriplet
