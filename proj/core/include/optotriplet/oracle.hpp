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

#ifndef OPTOTRIPLET_ORACLE_HPP_
#define OPTOTRIPLET_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "optotriplet/compare.hpp"
#include "optotriplet/linear_model.hpp"
#include "optotriplet/psd.hpp"
#include "optotriplet/sweep.hpp"

namespace optotriplet {

// Square force pulse on the amplitude quadrature: f_sa(t) = amplitude *
// cos(phase) for start <= t < start + duration. Amplitude is in normalised
// units (F / sqrt(2 hbar omega_m m)).
struct PulseSignal {
  double amplitude = 0.0;
  double phase = 0.0;
  double duration = 0.0;  // s
  double start = 0.0;     // s
  double value() const;
};

struct SimConfig {
  double dt = 0.0;        // 0: 0.05 / LinearModel::max_rate()
  double duration = 0.0;  // 0: 2e4 mechanical periods
  std::size_t trajectories = 64;
  std::uint64_t seed = 1;
  std::size_t segments = 16;
  bool noise = true;
  // Noise off only: start from the state that makes the record periodic.
  bool periodic = false;
  std::optional<PulseSignal> signal;
  std::optional<Band> band;  // default_band() when unset
  YPolicy y_policy = YPolicy::analytic_optimal();
  std::string scenario;
  unsigned threads = 0;  // 0: hardware concurrency
};

// [max(2 pi / (100 tau), 100 * 2 pi / T), min(20 pi / tau, 0.1 pi / dt)]
Band default_band(const DerivedParams& d, double dt, double duration);

// Fills defaults and checks dt < 0.1 / max rate, T >= 100 * 2 pi / band.lo,
// a non-empty band and enough samples for the segment count. Throws
// ParameterError on violations and NumericalError for unstable dynamics.
SimConfig resolve(const DerivedParams& d, SimConfig cfg);

struct Trajectory {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::vector<double> b_plus;   // step-averaged b+a
  std::vector<double> b_minus;  // step-averaged b-a
};

struct TimeSeriesBundle {
  double dt = 0.0;
  std::vector<double> times;  // step midpoints
  std::vector<Trajectory> trajectories;
  std::string scenario;
};

std::uint64_t trajectory_seed(std::uint64_t seed, std::size_t index);

// Exact-update integrator for one resolved configuration. run() is const and
// may be called concurrently.
class Simulator {
 public:
  Simulator(const DerivedParams& d, const SimConfig& resolved);
  ~Simulator();
  Simulator(Simulator&&) noexcept;
  Simulator& operator=(Simulator&&) noexcept;

  std::size_t samples() const;
  std::vector<double> times() const;
  Trajectory run(std::size_t index) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// All trajectories in memory; cfg is resolved first.
TimeSeriesBundle simulate(const DerivedParams& d, const SimConfig& cfg);

// Averaged Hann periodogram of Sigma = w+ b+a + w- b-a, the weights taken per
// bin from the spectra module with the given y policy (indexed by in-band
// bin). Only bins inside `band` are returned.
PsdEstimate estimate_psd(const TimeSeriesBundle& ts, const DerivedParams& d,
                         const YPolicy& y, std::size_t segments, Band band);

struct OracleOptions {
  CompareOptions compare;
  bool keep_first_trajectory = false;
};

struct OracleResult {
  SimConfig config;  // resolved
  PsdEstimate estimate;
  std::vector<SpectrumRecord> analytic;  // at the estimate's bins
  ComparisonReport report;
  std::vector<std::uint64_t> seeds;
  std::optional<Trajectory> first_trajectory;
  std::vector<double> times;  // filled with first_trajectory
};

// Streams trajectories through the Sigma periodogram in parallel and reduces
// in trajectory order, so results do not depend on the thread count.
OracleResult run_oracle(const DerivedParams& d, const SimConfig& cfg,
                        const OracleOptions& options = {});

struct TransferReport {
  bool pass = false;
  Band band;
  double dt = 0.0;
  double duration = 0.0;
  double tolerance = 0.01;
  std::size_t bins_checked = 0;
  double max_relative_error = 0.0;  // over bins with |F| >= 5% of the peak
  double max_error_over_peak = 0.0; // over every in-band bin
  std::vector<double> omega;
  std::vector<Complex> expected;
  std::vector<Complex> measured;
};

// Noise-free periodic pulse response. Sigma's transform is compared per bin
// with sinc(Omega dt / 2) F(Omega); dt is shortened so the pulse spans a whole
// number of steps. Without a signal in cfg a unit pulse of length tau is used.
TransferReport signal_transfer_check(const DerivedParams& d, SimConfig cfg);

// CSV with header "time,b_plus_a,b_minus_a".
void write_timeseries(std::ostream& out, const std::vector<double>& times,
                      const Trajectory& trajectory);

}  // namespace optotriplet

#endif  // OPTOTRIPLET_ORACLE_HPP_
