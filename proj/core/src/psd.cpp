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
#include <mutex>

#include <fftw3.h>

#include "optotriplet/constants.hpp"
#include "optotriplet/errors.hpp"

namespace optotriplet {
namespace {

constexpr std::size_t kMinSegments = 8;
constexpr std::size_t kMinSegmentLength = 16;

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

SegmentTransform::SegmentTransform(std::size_t length, bool windowed)
    : length_(length), window_(length, 1.0) {
  if (length < 2) throw ParameterError("segment length must be at least 2");
  if (windowed) {
    for (std::size_t n = 0; n < length; ++n) {
      const double s = std::sin(constants::kPi * static_cast<double>(n) /
                                static_cast<double>(length));
      window_[n] = s * s;
    }
  }
  for (const double w : window_) window_power_ += w * w;

  in_ = fftw_alloc_real(length);
  auto* out = fftw_alloc_complex(bins());
  out_ = out;
  if (in_ == nullptr || out == nullptr) {
    fftw_free(in_);
    fftw_free(out);
    throw NumericalError("FFT buffer allocation failed");
  }
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_ = fftw_plan_dft_r2c_1d(static_cast<int>(length), in_, out, FFTW_ESTIMATE);
  }
  if (plan_ == nullptr) {
    fftw_free(in_);
    fftw_free(out);
    throw NumericalError("FFT plan creation failed");
  }
}

SegmentTransform::~SegmentTransform() {
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_));
  }
  fftw_free(in_);
  fftw_free(static_cast<fftw_complex*>(out_));
}

void SegmentTransform::transform(std::span<const double> in, std::span<Complex> out) {
  if (in.size() != length_ || out.size() != bins()) {
    throw ParameterError("segment transform size mismatch");
  }
  for (std::size_t n = 0; n < length_; ++n) in_[n] = window_[n] * in[n];
  auto* res = static_cast<fftw_complex*>(out_);
  fftw_execute(static_cast<fftw_plan>(plan_));
  // FFTW uses e^{-i...}; the conjugate gives the e^{+i Omega t} convention.
  for (std::size_t k = 0; k < bins(); ++k) out[k] = Complex(res[k][0], -res[k][1]);
}

std::size_t segment_length_for(std::size_t samples, std::size_t segments) {
  if (segments < kMinSegments) {
    throw ParameterError("at least 8 segments are required");
  }
  const std::size_t length = samples / segments;
  if (length < kMinSegmentLength) {
    throw ParameterError("series too short for the requested segment count");
  }
  return length;
}

std::vector<std::size_t> band_bins(std::size_t segment_length, double dt, Band band) {
  std::vector<std::size_t> out;
  const double resolution = constants::kTwoPi / (static_cast<double>(segment_length) * dt);
  for (std::size_t k = 1; 2 * k < segment_length; ++k) {
    if (band.contains(resolution * static_cast<double>(k))) out.push_back(k);
  }
  return out;
}

PsdEstimate estimate_psd(std::span<const std::vector<double>> records, double dt,
                         std::size_t segments) {
  if (records.empty()) throw ParameterError("no records to analyse");
  if (!(dt > 0.0)) throw ParameterError("sample spacing must be positive");
  const std::size_t samples = records.front().size();
  for (const auto& r : records) {
    if (r.size() != samples) throw ParameterError("records differ in length");
  }
  const std::size_t length = segment_length_for(samples, segments);

  SegmentTransform fft(length);
  std::vector<Complex> spec(fft.bins());
  std::vector<double> sum(fft.bins(), 0.0);
  for (const auto& r : records) {
    for (std::size_t s = 0; s < segments; ++s) {
      fft.transform(std::span<const double>(r).subspan(s * length, length), spec);
      for (std::size_t k = 0; k < spec.size(); ++k) sum[k] += std::norm(spec[k]);
    }
  }

  PsdEstimate est;
  est.dt = dt;
  est.segment_length = length;
  est.segments = segments;
  est.records = records.size();
  const double count = static_cast<double>(segments * records.size());
  const double norm = dt / (fft.window_power() * count);
  const double resolution = constants::kTwoPi / (static_cast<double>(length) * dt);
  for (std::size_t k = 0; 2 * k < length; ++k) {
    est.omega.push_back(resolution * static_cast<double>(k));
    est.psd.push_back(sum[k] * norm);
    est.rel_error.push_back(1.0 / std::sqrt(count));
  }
  est.band = {0.0, est.omega.back()};  // below Nyquist
  return est;
}

}  // namespace optotriplet
