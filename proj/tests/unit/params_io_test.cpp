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

#include "optotriplet/params_io.hpp"

#include <string>

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "optotriplet/errors.hpp"

namespace optotriplet {
namespace {

TEST(ParamsIoTest, RoundTripIsExact) {
  PhysParams p = table1_preset();
  p.central_width = CentralWidthConvention::kFullLoss;
  p.power_in = 1.2345678901234567e-6;
  EXPECT_EQ(parse_config(to_config_json(p), false), p);
}

TEST(ParamsIoTest, UnknownKeyIsRejected) {
  nlohmann::json doc = nlohmann::json::parse(to_config_json(table1_preset()));
  doc["gamma_typo"] = 1.0;
  EXPECT_THROW(parse_config(doc.dump(), false), ParameterError);
}

TEST(ParamsIoTest, MissingKeyNeedsFallback) {
  EXPECT_THROW(parse_config(R"({"mass": 1e-10})", false), ParameterError);
  const PhysParams p = parse_config(R"({"mass": 1e-10})", true);
  PhysParams expected = table1_preset();
  expected.mass = 1e-10;
  EXPECT_EQ(p, expected);
}

TEST(ParamsIoTest, SymbolicTau) {
  const PhysParams printed = parse_config(R"({"tau": "printed"})", true);
  EXPECT_DOUBLE_EQ(printed.tau, 0.84e-3);
  const PhysParams thirty = parse_config(R"({"tau": "thirty_periods", "omega_m": 1e6})", true);
  EXPECT_DOUBLE_EQ(thirty.tau, 30.0 * 2.0 * 3.141592653589793 / 1e6);
  EXPECT_THROW(parse_config(R"({"tau": "soon"})", true), ParameterError);
}

TEST(ParamsIoTest, SchemaViolations) {
  EXPECT_THROW(parse_config("not json", true), ParameterError);
  EXPECT_THROW(parse_config("[1, 2]", true), ParameterError);
  EXPECT_THROW(parse_config(R"({"mass": "heavy"})", true), ParameterError);
  EXPECT_THROW(parse_config(R"({"central_width": "wide"})", true), ParameterError);
  EXPECT_THROW(parse_config(R"({"mass": -1})", true), ParameterError);
}

TEST(ParamsIoTest, LoadConfigReportsMissingFile) {
  EXPECT_THROW(load_config("/nonexistent/params.json", true), ParameterError);
}

TEST(ParamsIoTest, DerivedJsonCarriesKeyValues) {
  const DerivedParams d = derive(table1_preset());
  const auto doc = nlohmann::json::parse(to_json(d));
  EXPECT_DOUBLE_EQ(doc.at("n_thermal").get<double>(), d.n_thermal);
  EXPECT_DOUBLE_EQ(doc.at("thermal_factor").get<double>(), d.thermal_factor);
}

}  // namespace
}  // namespace optotriplet
