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

#include "optotriplet/psd.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "optotriplet/constants.hpp"
#include "optotriplet/errors.hpp"

namespace optotriplet {
namespace {

std::vector<std::vector<double>> white(std::size_t records, std::size_t n,
                                       std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> g;
  std::vector<std::vector<double>> out(records, std::vector<double>(n));
  for (auto& r : out) {
    for (double& v : r) v = g(gen);
  }
  return out;
}

double mean_above_dc(const PsdEstimate& e) {
  double s = 0.0;
  for (std::size_t k = 1; k < e.psd.size(); ++k) s += e.psd[k];
  return s / static_cast<double>(e.psd.size() - 1);
}

TEST(PsdTest, WhiteNoiseLevelIsDt) {
  const double dt = 0.01;
  const auto recs = white(4, 16 * 2048, 7);
  const PsdEstimate e = estimate_psd(recs, dt, 16);
  EXPECT_EQ(e.segment_length, 2048u);
  EXPECT_EQ(e.psd.size(), 1024u);
  EXPECT_NEAR(mean_above_dc(e) / dt, 1.0, 0.03);
  EXPECT_DOUBLE_EQ(e.rel_error[5], 1.0 / 8.0);
  EXPECT_NEAR(e.omega[1], constants::kTwoPi / (2048 * dt), 1e-12);
}

TEST(PsdTest, BinScatterMatchesErrorBar) {
  const auto recs = white(2, 16 * 1024, 11);
  const PsdEstimate e = estimate_psd(recs, 1.0, 16);
  double var = 0.0;
  for (std::size_t k = 1; k < e.psd.size(); ++k) var += std::pow(e.psd[k] - 1.0, 2);
  var /= static_cast<double>(e.psd.size() - 1);
  EXPECT_NEAR(std::sqrt(var) / e.rel_error[1], 1.0, 0.15);
}

TEST(PsdTest, DoublingRecordsShrinksErrorBar) {
  const auto one = estimate_psd(white(2, 8 * 64, 1), 1.0, 8);
  const auto two = estimate_psd(white(4, 8 * 64, 1), 1.0, 8);
  EXPECT_NEAR(two.rel_error[3] / one.rel_error[3], 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(PsdTest, SinusoidPeaksAtItsBin) {
  const std::size_t length = 256;
  const std::size_t k0 = 37;
  std::vector<double> x(8 * length);
  for (std::size_t n = 0; n < x.size(); ++n) {
    x[n] = std::cos(constants::kTwoPi * k0 * n / length);
  }
  const std::vector<std::vector<double>> recs = {x};
  const PsdEstimate e = estimate_psd(recs, 1.0, 8);
  std::size_t peak = 0;
  for (std::size_t k = 1; k < e.psd.size(); ++k) {
    if (e.psd[k] > e.psd[peak]) peak = k;
  }
  EXPECT_EQ(peak, k0);
}

TEST(PsdTest, TransformUsesPositiveExponent) {
  const std::size_t length = 64;
  SegmentTransform fft(length, false);
  std::vector<double> x(length);
  for (std::size_t n = 0; n < length; ++n) x[n] = std::sin(constants::kTwoPi * 5 * n / length);
  std::vector<Complex> out(fft.bins());
  fft.transform(x, out);
  EXPECT_NEAR(out[5].real(), 0.0, 1e-12);
  EXPECT_NEAR(out[5].imag(), 32.0, 1e-12);
  EXPECT_DOUBLE_EQ(fft.window_power(), 64.0);
}

TEST(PsdTest, HannWindowPower) {
  SegmentTransform fft(128);
  EXPECT_NEAR(fft.window_power(), 128.0 * 3.0 / 8.0, 1e-12);
}

TEST(PsdTest, RejectsShortInput) {
  EXPECT_THROW(segment_length_for(1000, 4), ParameterError);
  EXPECT_THROW(segment_length_for(100, 8), ParameterError);
  const std::vector<std::vector<double>> uneven = {std::vector<double>(256),
                                                   std::vector<double>(255)};
  EXPECT_THROW(estimate_psd(uneven, 1.0, 8), ParameterError);
  EXPECT_THROW(estimate_psd(std::span<const std::vector<double>>{}, 1.0, 8), ParameterError);
}

TEST(PsdTest, BandBinsExcludeDcAndNyquist) {
  const auto all = band_bins(16, 1.0, {0.0, 1e9});
  ASSERT_EQ(all.size(), 7u);
  EXPECT_EQ(all.front(), 1u);
  EXPECT_EQ(all.back(), 7u);
  const double res = constants::kTwoPi / 16.0;
  const auto some = band_bins(16, 1.0, {2.5 * res, 4.0 * res});
  EXPECT_EQ(some, (std::vector<std::size_t>{3, 4}));
}

}  // namespace
}  // namespace optotriplet
