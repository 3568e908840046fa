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

#ifndef OPTOTRIPLET_PSD_HPP_
#define OPTOTRIPLET_PSD_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "optotriplet/spectra.hpp"

namespace optotriplet {

struct Band {
  double lo = 0.0;  // rad/s
  double hi = 0.0;
  bool contains(double omega) const { return omega >= lo && omega <= hi; }
};

// Two-sided spectral density estimate. Transforms use e^{+i Omega t}.
struct PsdEstimate {
  std::vector<double> omega;      // bin centres, rad/s
  std::vector<double> psd;
  std::vector<double> rel_error;  // 1 / sqrt(segments * records) per bin
  Band band;
  double dt = 0.0;
  std::size_t segment_length = 0;
  std::size_t segments = 0;  // per record
  std::size_t records = 0;
};

// Real-to-complex transform of one Hann-windowed segment (periodic Hann).
// Owns its FFTW plan and buffers; plan creation is serialised internally,
// and distinct instances may be used from different threads.
class SegmentTransform {
 public:
  explicit SegmentTransform(std::size_t length, bool windowed = true);
  ~SegmentTransform();
  SegmentTransform(const SegmentTransform&) = delete;
  SegmentTransform& operator=(const SegmentTransform&) = delete;

  std::size_t length() const { return length_; }
  std::size_t bins() const { return length_ / 2 + 1; }
  // Sum of squared window values.
  double window_power() const { return window_power_; }

  // out[k] = sum_n w_n x_n e^{+2 pi i k n / L}, k = 0 .. L/2.
  void transform(std::span<const double> in, std::span<Complex> out);

 private:
  std::size_t length_;
  std::vector<double> window_;
  double window_power_ = 0.0;
  double* in_ = nullptr;
  void* out_ = nullptr;
  void* plan_ = nullptr;
};

// Averaged Hann periodogram of one real channel; each record is cut into
// `segments` non-overlapping pieces. Unit-variance samples spaced dt apart
// give psd = dt. Throws ParameterError for segments < 8 or records shorter
// than 16 samples per segment.
PsdEstimate estimate_psd(std::span<const std::vector<double>> records, double dt,
                         std::size_t segments);

// Segment length used for a record of n samples.
std::size_t segment_length_for(std::size_t samples, std::size_t segments);

// Indices k with 2 pi k / (L dt) inside the band, excluding DC and Nyquist.
std::vector<std::size_t> band_bins(std::size_t segment_length, double dt, Band band);

}  // namespace optotriplet

#endif  // OPTOTRIPLET_PSD_HPP_
