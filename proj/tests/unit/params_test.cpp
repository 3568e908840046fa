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

#include "optotriplet/params.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gtest/gtest.h"
#include "optotriplet/constants.hpp"
#include "optotriplet/errors.hpp"
#include "random_params.hpp"

namespace optotriplet {
namespace {

// Reference values evaluated at 30 digits from the Table 1 inputs.
constexpr double kTau = 8.57142857142857e-5;
constexpr double kX0 = 6.9249098502838e-16;
constexpr double kEta = 8.4155595438449;
constexpr double kC0Squared = 68536501.4007218;
constexpr double kThermal = 1190663.45063405;
constexpr double kB = 0.224434772964587;
constexpr double kBPrinted = 2.19946077505296;
constexpr double kGammaM = 0.00109955742875643;

TEST(ParamsTest, Table1DerivedValues) {
  const DerivedParams d = derive(table1_preset());
  EXPECT_NEAR(d.tau, kTau, 1e-12 * kTau);
  EXPECT_NEAR(d.x0, kX0, 1e-12 * kX0);
  EXPECT_NEAR(d.eta_nominal, kEta, 1e-12 * kEta);
  EXPECT_NEAR(d.c0_squared, kC0Squared, 1e-12 * kC0Squared);
  EXPECT_NEAR(d.n_thermal, kThermal, 1e-12 * kThermal);
  EXPECT_NEAR(d.thermal_factor, kB, 1e-12);
  EXPECT_NEAR(d.gamma_m, kGammaM, 1e-15);
}

TEST(ParamsTest, ThermalOccupancyMatchesPrintedTable) {
  const DerivedParams d = derive(table1_preset());
  EXPECT_NEAR(d.n_thermal / 1.2e6, 1.0, 0.02);
}

TEST(ParamsTest, ThermalOccupancyMatchesHighTemperatureSeries) {
  // n = 1/x - 1/2 + x/12 - x^3/720 for x = hbar omega / kT << 1.
  const PhysParams p = table1_preset();
  const double x = constants::kHbar * p.omega_m / (constants::kBoltzmann * p.temperature);
  const double series = 1.0 / x - 0.5 + x / 12.0 - x * x * x / 720.0;
  EXPECT_NEAR(derive(p).n_thermal / series, 1.0, 1e-12);
}

TEST(ParamsTest, ThermalFactorDependsOnTauReading) {
  EXPECT_GE(derive(table1_preset()).thermal_factor, 0.18);
  EXPECT_LE(derive(table1_preset()).thermal_factor, 0.26);
  const DerivedParams printed = derive(table1_preset(TauChoice::kPrinted));
  EXPECT_NEAR(printed.tau, 0.84e-3, 0.0);
  EXPECT_NEAR(printed.thermal_factor, kBPrinted, 1e-9);
}

TEST(ParamsTest, LossRatesAddToInputCouplings) {
  const PhysParams p = table1_preset();
  const DerivedParams d = derive(p);
  EXPECT_DOUBLE_EQ(d.gamma_plus, p.gamma0_plus + p.gamma_e_plus);
  EXPECT_DOUBLE_EQ(d.gamma_minus, p.gamma0_minus + p.gamma_e_minus);
  EXPECT_DOUBLE_EQ(d.gamma0_plus + d.gamma0_minus, 2.0 * p.gamma0);
  EXPECT_DOUBLE_EQ(d.eta_plus, 1.03 * d.eta_nominal);
  EXPECT_DOUBLE_EQ(d.eta_minus, 0.97 * d.eta_nominal);
}

TEST(ParamsTest, CentralWidthConvention) {
  PhysParams p = table1_preset();
  EXPECT_DOUBLE_EQ(derive(p).gamma_central, p.gamma0 + 0.5 * p.gamma_e);
  p.central_width = CentralWidthConvention::kFullLoss;
  EXPECT_DOUBLE_EQ(derive(p).gamma_central, 2.3e5);
}

TEST(ParamsTest, ZeroTemperatureGivesZeroOccupancy) {
  PhysParams p = table1_preset();
  p.temperature = 0.0;
  const DerivedParams d = derive(p);
  EXPECT_EQ(d.n_thermal, 0.0);
  EXPECT_EQ(d.thermal_factor, 0.0);
}

TEST(ParamsTest, DeriveIsDeterministic) {
  const PhysParams p = table1_preset();
  const PhysParams copy = p;
  EXPECT_EQ(derive(p), derive(p));
  EXPECT_EQ(p, copy);
}

struct BadField {
  const char* name;
  void (*mutate)(PhysParams&);
};

void PrintTo(const BadField& f, std::ostream* os) { *os << f.name; }

class ValidateTest : public ::testing::TestWithParam<BadField> {};

TEST_P(ValidateTest, RejectsAndNamesField) {
  PhysParams p = table1_preset();
  GetParam().mutate(p);
  try {
    validate(p);
    FAIL() << "accepted bad " << GetParam().name;
  } catch (const ParameterError& e) {
    EXPECT_NE(std::string(e.what()).find(GetParam().name), std::string::npos) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Fields, ValidateTest,
    ::testing::Values(
        BadField{"mass", [](PhysParams& p) { p.mass = -1.0; }},
        BadField{"omega_m", [](PhysParams& p) { p.omega_m = 0.0; }},
        BadField{"quality_factor", [](PhysParams& p) { p.quality_factor = 0.5; }},
        BadField{"temperature", [](PhysParams& p) { p.temperature = -1.0; }},
        BadField{"tau", [](PhysParams& p) { p.tau = 0.0; }},
        BadField{"gamma0_plus", [](PhysParams& p) { p.gamma0_plus = 0.0; }},
        BadField{"gamma_e_minus", [](PhysParams& p) { p.gamma_e_minus = -1.0; }},
        BadField{"eps_plus", [](PhysParams& p) { p.eps_plus = 2.5; }},
        BadField{"power_in", [](PhysParams& p) {
          p.power_in = std::numeric_limits<double>::quiet_NaN();
        }}),
    [](const ::testing::TestParamInfo<BadField>& info) { return std::string(info.param.name); });

TEST(ParamsTest, LosslessIsValid) {
  PhysParams p = table1_preset();
  p.gamma_e = p.gamma_e_plus = p.gamma_e_minus = 0.0;
  EXPECT_NO_THROW(validate(p));
}

TEST(RateModelTest, FillsRateUnits) {
  RateModel r;
  r.gamma_m = 1e-3;
  r.n_thermal = 10.0;
  r.gamma0_plus = 1.0;
  r.gamma0_minus = 2.0;
  r.gamma_e_plus = 0.1;
  r.coupling_plus = 0.3;
  r.coupling_minus = 0.2;
  const DerivedParams d = from_rates(r);
  EXPECT_DOUBLE_EQ(d.c0_squared, 1.0);
  EXPECT_DOUBLE_EQ(d.eta_plus, 0.3);
  EXPECT_DOUBLE_EQ(d.gamma_plus, 1.1);
  EXPECT_DOUBLE_EQ(d.gamma_minus, 2.0);
  r.coupling_minus = 0.0;
  EXPECT_THROW(from_rates(r), ParameterError);
}

TEST(RegimeTest, Table1IsMarginalInSidebandAndThermalChecks) {
  const PhysParams p = table1_preset();
  const RegimeReport r = check_regime(derive(p), p);
  EXPECT_NEAR(r.resolved_sideband.ratio, (p.gamma0_minus + p.gamma_e_minus) / p.omega_m, 1e-15);
  EXPECT_EQ(r.resolved_sideband.verdict, Verdict::kMarginal);
  EXPECT_EQ(r.thermal.verdict, Verdict::kMarginal);
  EXPECT_NEAR(r.thermal_factor, kB, 1e-12);
  EXPECT_EQ(r.loss_smallness.verdict, Verdict::kPass);
  EXPECT_EQ(r.short_pulse.verdict, Verdict::kPass);
  const std::string text = format_report(r);
  EXPECT_NE(text.find("marginal-pass"), std::string::npos);
  EXPECT_NE(text.find("B = 0.2244"), std::string::npos);
}

TEST(RegimeTest, LosslessMarginIsInfinite) {
  PhysParams p = table1_preset();
  p.gamma_e = p.gamma_e_plus = p.gamma_e_minus = 0.0;
  const RegimeReport r = check_regime(derive(p), p);
  EXPECT_EQ(r.loss_smallness.ratio, 0.0);
  EXPECT_TRUE(std::isinf(r.loss_smallness.margin));
  EXPECT_NE(format_report(r).find("∞"), std::string::npos);
}

TEST(RegimeTest, FailsWhenRatioExceedsOne) {
  PhysParams p = table1_preset();
  p.omega_m = 1e5;
  const RegimeReport r = check_regime(derive(p), p);
  EXPECT_EQ(r.resolved_sideband.verdict, Verdict::kFail);
  EXPECT_STREQ(to_string(Verdict::kFail), "fail");
}

}  // namespace
}  // namespace optotriplet
