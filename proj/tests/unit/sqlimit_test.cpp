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

#include "optotriplet/sqlimit.hpp"

#include <cmath>
#include <random>

#include <boost/math/tools/minima.hpp>

#include "gtest/gtest.h"
#include "optotriplet/constants.hpp"
#include "optotriplet/errors.hpp"
#include "random_params.hpp"

namespace optotriplet {
namespace {

using testing::log_uniform;
using testing::rel_diff;

TEST(SqlimitTest, QuantumPartIsBoundedBySql) {
  std::mt19937_64 gen(3);
  for (int i = 0; i < 500; ++i) {
    const double gm = log_uniform(gen, 1e-4, 1e2);
    const double w = log_uniform(gen, 1e-3, 1e5);
    const double k = log_uniform(gen, 1e-6, 1e6);
    const double thermal = 2.0 * gm * 0.5;
    EXPECT_GE(s_fa(k, gm, 0.0, w) - thermal, 2.0 * std::hypot(gm, w) * (1.0 - 1e-12));
  }
}

TEST(SqlimitTest, OptimalStrengthMatchesNumericMinimum) {
  std::mt19937_64 gen(5);
  for (int i = 0; i < 50; ++i) {
    const double gm = log_uniform(gen, 1e-3, 10.0);
    const double w = log_uniform(gen, 1e-2, 1e3);
    const double nt = log_uniform(gen, 1e-2, 1e3);
    // Minimise over log K with Brent.
    const auto f = [&](double lk) { return s_fa(std::exp(lk), gm, nt, w); };
    const auto best = boost::math::tools::brent_find_minima(f, -20.0, 20.0, 40);
    EXPECT_LT(rel_diff(std::exp(best.first), optimal_strength(gm, w)), 1e-5);
    EXPECT_LT(rel_diff(best.second, 2.0 * gm * (nt + 0.5) + 2.0 * std::hypot(gm, w)), 1e-12);
  }
}

TEST(SqlimitTest, StrengthLimitsAndPreconditions) {
  EXPECT_GT(s_fa(1e12, 1.0, 0.0, 1.0), 1e11);
  EXPECT_GT(s_fa(1e-12, 1.0, 0.0, 1.0), 1e11);
  EXPECT_THROW(s_fa(0.0, 1.0, 0.0, 1.0), ParameterError);
  EXPECT_THROW(s_fa(-1.0, 1.0, 0.0, 1.0), ParameterError);
}

TEST(SqlimitTest, Table1ForceBudget) {
  const DerivedParams d = derive(table1_preset());
  const ForceBudget b = min_force(d, d.tau);
  EXPECT_LT(rel_diff(b.force_sql, 6.76781443763262e-15), 1e-12);
  EXPECT_LT(rel_diff(b.force_min, 6.87169617118316e-15), 1e-12);
  EXPECT_LT(rel_diff(b.thermal_term, 30548079.14835), 1e-11);
  EXPECT_LT(rel_diff(b.sql_term, 987512987.194185), 1e-12);
  EXPECT_DOUBLE_EQ(b.total, b.thermal_term + b.sql_term);
  EXPECT_TRUE(b.short_pulse);
  // Quantum terms 4 pi / tau^2 and (2 / sqrt 3)(2 pi / tau^2).
  const double scale = b.force_sql * b.force_sql / b.sql_term;
  const double alt = b.force_alternate * b.force_alternate / scale - b.thermal_term;
  EXPECT_NEAR(alt / b.sql_term, std::sqrt(3.0), 1e-9);
}

TEST(SqlimitTest, ForceScaling) {
  PhysParams hot = table1_preset();
  hot.quality_factor = 1e4;
  const DerivedParams d1 = derive(hot);
  hot.temperature *= 4.0;
  const DerivedParams d4 = derive(hot);
  // Thermal-dominated: force tracks sqrt(n_T + 1/2).
  const double r = min_force(d4, d4.tau).force_min / min_force(d1, d1.tau).force_min;
  EXPECT_NEAR(r, std::sqrt((d4.n_thermal + 0.5) / (d1.n_thermal + 0.5)), 1e-3);
  EXPECT_NEAR(r, 2.0, 1e-3);

  PhysParams heavy = table1_preset();
  heavy.mass *= 100.0;
  const DerivedParams dh = derive(heavy);
  const DerivedParams d0 = derive(table1_preset());
  EXPECT_NEAR(min_force(dh, dh.tau).force_sql / min_force(d0, d0.tau).force_sql, 10.0, 1e-12);
  EXPECT_THROW(min_force(d0, 0.0), ParameterError);
  EXPECT_THROW(min_force(d0, -1.0), ParameterError);
  EXPECT_FALSE(min_force(d0, 1e9).short_pulse);
}

TEST(SqlimitTest, BandIntegralMatchesClosedForm) {
  std::mt19937_64 gen(9);
  for (int i = 0; i < 200; ++i) {
    const double gm = log_uniform(gen, 1e-4, 1e2);
    const double tau = log_uniform(gen, 1e-5, 1e1);
    const double k = log_uniform(gen, 1e-3, 1e3) * optimal_strength(gm, constants::kPi / tau);
    const double nt = log_uniform(gen, 1e-3, 1e6);
    const BandIntegral b = band_integral_check(k, gm, nt, tau);
    EXPECT_LE(b.relative_difference, 1e-6);
    const double closed =
        (2.0 * gm * (nt + 0.5) +
         (gm * gm + std::pow(constants::kTwoPi / tau, 2) / 3.0) / k + k) / tau;
    EXPECT_LT(rel_diff(b.closed_form, closed), 1e-13);
  }
}

TEST(SqlimitTest, Table1BandIntegral) {
  const DerivedParams d = derive(table1_preset());
  const double k = optimal_strength(d.gamma_m, constants::kPi / d.tau);
  const BandIntegral b = band_integral_check(d, k, d.tau);
  EXPECT_LE(b.relative_difference, 1e-6);
  EXPECT_THROW(band_integral_check(d, -1.0, d.tau), ParameterError);
}

}  // namespace
}  // namespace optotriplet
