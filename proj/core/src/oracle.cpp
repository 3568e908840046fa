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

#include "optotriplet/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

#include "optotriplet/constants.hpp"
#include "optotriplet/errors.hpp"

namespace optotriplet {
namespace {

constexpr double kSignificant = 0.05;

// Per-bin Sigma weights for one segment length.
class SigmaPeriodogram {
 public:
  SigmaPeriodogram(const DerivedParams& d, const YPolicy& y, double dt,
                   std::size_t length, Band band)
      : length_(length), bins_(band_bins(length, dt, band)) {
    const double resolution = constants::kTwoPi / (static_cast<double>(length) * dt);
    for (std::size_t i = 0; i < bins_.size(); ++i) {
      const double omega = resolution * static_cast<double>(bins_[i]);
      const CoeffSet c = coeffs(d, omega);
      const SigmaWeights w = sigma_weights(c, y.resolve(c, i));
      omega_.push_back(omega);
      plus_.push_back(w.plus);
      minus_.push_back(w.minus);
    }
    if (bins_.empty()) throw ParameterError("no frequency bins inside the comparison band");
  }

  const std::vector<double>& omega() const { return omega_; }

  // Adds |Sigma_k|^2 over every segment of one trajectory into sum.
  void accumulate(const Trajectory& t, std::size_t segments, SegmentTransform& fft,
                  std::vector<double>& sum) const {
    std::vector<Complex> sp(fft.bins());
    std::vector<Complex> sm(fft.bins());
    for (std::size_t s = 0; s < segments; ++s) {
      const std::size_t offset = s * length_;
      fft.transform(std::span<const double>(t.b_plus).subspan(offset, length_), sp);
      fft.transform(std::span<const double>(t.b_minus).subspan(offset, length_), sm);
      for (std::size_t i = 0; i < bins_.size(); ++i) {
        const std::size_t k = bins_[i];
        sum[i] += std::norm(plus_[i] * sp[k] + minus_[i] * sm[k]);
      }
    }
  }

  std::size_t size() const { return bins_.size(); }

 private:
  std::size_t length_;
  std::vector<std::size_t> bins_;
  std::vector<double> omega_;
  std::vector<Complex> plus_;
  std::vector<Complex> minus_;
};

PsdEstimate finish(const SigmaPeriodogram& sigma, const std::vector<double>& sum,
                   double window_power, double dt, std::size_t length,
                   std::size_t segments, std::size_t records, Band band) {
  PsdEstimate est;
  est.dt = dt;
  est.segment_length = length;
  est.segments = segments;
  est.records = records;
  est.band = band;
  const double count = static_cast<double>(segments * records);
  const double norm = dt / (window_power * count);
  est.omega = sigma.omega();
  for (const double s : sum) {
    est.psd.push_back(s * norm);
    est.rel_error.push_back(1.0 / std::sqrt(count));
  }
  return est;
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested != 0 ? requested : std::thread::hardware_concurrency();
  n = std::max(1u, n);
  return static_cast<unsigned>(std::min<std::size_t>(n, jobs));
}

}  // namespace

PsdEstimate estimate_psd(const TimeSeriesBundle& ts, const DerivedParams& d,
                         const YPolicy& y, std::size_t segments, Band band) {
  if (ts.trajectories.empty()) throw ParameterError("bundle holds no trajectories");
  const std::size_t samples = ts.trajectories.front().b_plus.size();
  for (const auto& t : ts.trajectories) {
    if (t.b_plus.size() != samples || t.b_minus.size() != samples) {
      throw ParameterError("trajectory series differ in length");
    }
  }
  const std::size_t length = segment_length_for(samples, segments);
  const SigmaPeriodogram sigma(d, y, ts.dt, length, band);
  SegmentTransform fft(length);
  std::vector<double> sum(sigma.size(), 0.0);
  for (const auto& t : ts.trajectories) sigma.accumulate(t, segments, fft, sum);
  return finish(sigma, sum, fft.window_power(), ts.dt, length, segments,
                ts.trajectories.size(), band);
}

OracleResult run_oracle(const DerivedParams& d, const SimConfig& cfg,
                        const OracleOptions& options) {
  OracleResult res;
  res.config = resolve(d, cfg);
  const SimConfig& c = res.config;
  const Simulator sim(d, c);
  const std::size_t length = segment_length_for(sim.samples(), c.segments);
  const SigmaPeriodogram sigma(d, c.y_policy, c.dt, length, *c.band);

  std::vector<std::vector<double>> partial(c.trajectories);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  double window_power = 0.0;

  const auto work = [&] {
    try {
      SegmentTransform fft(length);
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= c.trajectories) break;
        const Trajectory t = sim.run(i);
        partial[i].assign(sigma.size(), 0.0);
        sigma.accumulate(t, c.segments, fft, partial[i]);
        if (i == 0 && options.keep_first_trajectory) res.first_trajectory = t;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(c.trajectories);
    }
  };
  const unsigned workers = worker_count(c.threads, c.trajectories);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  window_power = SegmentTransform(length).window_power();

  std::vector<double> sum(sigma.size(), 0.0);
  for (const auto& p : partial) {
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += p[k];
  }
  res.estimate = finish(sigma, sum, window_power, c.dt, length, c.segments,
                        c.trajectories, *c.band);
  for (std::size_t i = 0; i < c.trajectories; ++i) {
    res.seeds.push_back(trajectory_seed(c.seed, i));
  }
  res.analytic = spectrum_sweep(d, res.estimate.omega, c.y_policy, c.scenario);
  res.report = compare(res.analytic, res.estimate, *c.band, options.compare);
  if (res.first_trajectory) res.times = sim.times();
  return res;
}

TransferReport signal_transfer_check(const DerivedParams& d, SimConfig cfg) {
  if (!cfg.signal) cfg.signal = PulseSignal{1.0, 0.0, d.tau, 0.0};
  cfg.noise = false;
  cfg.periodic = true;
  cfg.trajectories = 1;
  cfg = resolve(d, cfg);

  // Whole number of steps per pulse and per record.
  const PulseSignal pulse = *cfg.signal;
  const double steps_per_pulse = std::ceil(pulse.duration / cfg.dt - 1e-9);
  cfg.dt = pulse.duration / steps_per_pulse;
  cfg.duration = std::ceil(cfg.duration / cfg.dt - 1e-9) * cfg.dt * (1.0 + 1e-12);
  cfg.signal->start = std::round(pulse.start / cfg.dt) * cfg.dt;
  const Band band = *cfg.band;
  cfg = resolve(d, cfg);

  const Simulator sim(d, cfg);
  const Trajectory t = sim.run(0);
  const std::size_t n = sim.samples();
  const double h = cfg.dt;

  SegmentTransform fft(n, false);
  std::vector<Complex> sp(fft.bins());
  std::vector<Complex> sm(fft.bins());
  fft.transform(t.b_plus, sp);
  fft.transform(t.b_minus, sm);

  TransferReport rep;
  rep.band = band;
  rep.dt = h;
  rep.duration = static_cast<double>(n) * h;
  const std::vector<std::size_t> bins = band_bins(n, h, band);
  if (bins.empty()) throw ParameterError("no frequency bins inside the comparison band");
  const double resolution = constants::kTwoPi / (static_cast<double>(n) * h);
  const double f0 = cfg.signal->value();
  const double t0 = cfg.signal->start;
  const double t1 = t0 + cfg.signal->duration;
  for (std::size_t i = 0; i < bins.size(); ++i) {
    const double omega = resolution * static_cast<double>(bins[i]);
    const CoeffSet c = coeffs(d, omega);
    const SigmaWeights w = sigma_weights(c, cfg.y_policy.resolve(c, i));
    // Sample n sits at the step midpoint (n + 1/2) h.
    const Complex shift = std::polar(h, 0.5 * omega * h);
    const Complex measured = shift * (w.plus * sp[bins[i]] + w.minus * sm[bins[i]]);
    const Complex pulse_ft =
        f0 * (std::exp(Complex(0.0, omega * t1)) - std::exp(Complex(0.0, omega * t0))) /
        Complex(0.0, omega);
    const double x = 0.5 * omega * h;
    rep.omega.push_back(omega);
    rep.expected.push_back(pulse_ft * (std::sin(x) / x));
    rep.measured.push_back(measured);
  }
  double peak = 0.0;
  for (const auto& e : rep.expected) peak = std::max(peak, std::abs(e));
  for (std::size_t i = 0; i < rep.omega.size(); ++i) {
    const double err = std::abs(rep.measured[i] - rep.expected[i]);
    rep.max_error_over_peak = std::max(rep.max_error_over_peak, err / peak);
    if (std::abs(rep.expected[i]) >= kSignificant * peak) {
      ++rep.bins_checked;
      rep.max_relative_error =
          std::max(rep.max_relative_error, err / std::abs(rep.expected[i]));
    }
  }
  rep.pass = rep.bins_checked > 0 && rep.max_relative_error <= rep.tolerance &&
             rep.max_error_over_peak <= rep.tolerance;
  return rep;
}

void write_timeseries(std::ostream& out, const std::vector<double>& times,
                      const Trajectory& trajectory) {
  if (times.size() != trajectory.b_plus.size() ||
      times.size() != trajectory.b_minus.size()) {
    throw ParameterError("time series lengths differ");
  }
  const auto old = out.precision(17);
  out << "time,b_plus_a,b_minus_a\n";
  for (std::size_t n = 0; n < times.size(); ++n) {
    out << times[n] << ',' << trajectory.b_plus[n] << ',' << trajectory.b_minus[n] << '\n';
  }
  out.precision(old);
}

}  // namespace optotriplet
