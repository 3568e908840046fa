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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "optotriplet/constants.hpp"
#include "optotriplet/errors.hpp"
#include "optotriplet/oracle.hpp"

namespace optotriplet {
namespace {

constexpr double kStepFraction = 0.05;
constexpr double kStepLimit = 0.1;
constexpr double kDefaultPeriods = 2e4;
constexpr double kDivergence = 1e150;
constexpr std::size_t kCheckEvery = 1024;

std::string describe(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

double PulseSignal::value() const { return amplitude * std::cos(phase); }

Band default_band(const DerivedParams& d, double dt, double duration) {
  using constants::kPi;
  using constants::kTwoPi;
  return {std::max(kTwoPi / (100.0 * d.tau), 100.0 * kTwoPi / duration),
          std::min(20.0 * kPi / d.tau, 0.1 * kPi / dt)};
}

SimConfig resolve(const DerivedParams& d, SimConfig cfg) {
  const LinearModel model = LinearModel::from(d);
  if (!(model.growth_rate() < 0.0)) {
    throw NumericalError("linearised dynamics are unstable (growth rate " +
                         describe(model.growth_rate()) + " 1/s)");
  }
  const double rate = model.max_rate();
  if (cfg.dt == 0.0) cfg.dt = kStepFraction / rate;
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
    throw ParameterError("time step must be positive");
  }
  if (!(cfg.dt < kStepLimit / rate)) {
    throw ParameterError("time step " + describe(cfg.dt) + " s violates dt < 0.1 / " +
                         describe(rate) + " 1/s");
  }
  if (cfg.duration == 0.0) {
    if (!(d.omega_m > 0.0)) {
      throw ParameterError("duration must be given when omega_m is unset");
    }
    cfg.duration = kDefaultPeriods * constants::kTwoPi / d.omega_m;
  }
  if (!(cfg.duration > 0.0) || !std::isfinite(cfg.duration)) {
    throw ParameterError("duration must be positive");
  }
  if (cfg.trajectories == 0) throw ParameterError("at least one trajectory is required");
  if (cfg.segments < 8) throw ParameterError("at least 8 segments are required");
  const double steps = std::floor(cfg.duration / cfg.dt);
  if (steps < 16.0 * static_cast<double>(cfg.segments)) {
    throw ParameterError("duration too short for the segment count");
  }
  if (!cfg.band) cfg.band = default_band(d, cfg.dt, cfg.duration);
  if (!(cfg.band->hi > cfg.band->lo) || !(cfg.band->lo > 0.0)) {
    throw ParameterError("comparison band [" + describe(cfg.band->lo) + ", " +
                         describe(cfg.band->hi) + "] rad/s is empty");
  }
  if (cfg.duration < 100.0 * constants::kTwoPi / cfg.band->lo * (1.0 - 1e-12)) {
    throw ParameterError("duration must cover 100 periods of the lowest band frequency");
  }
  if (cfg.periodic && cfg.noise) {
    throw ParameterError("periodic start is only defined without noise");
  }
  if (cfg.signal && (!(cfg.signal->duration > 0.0) || !std::isfinite(cfg.signal->amplitude))) {
    throw ParameterError("signal pulse needs a positive duration and finite amplitude");
  }
  return cfg;
}

std::uint64_t trajectory_seed(std::uint64_t seed, std::size_t index) {
  const auto idx = static_cast<std::uint64_t>(index);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

struct Simulator::Impl {
  SimConfig cfg;
  LinearModel model;
  StepPropagator step;
  std::size_t samples = 0;
  Eigen::Matrix<double, 7, Eigen::Dynamic> root;  // zeta1, zeta2(c+, c-), dW a+, dW a-
  Eigen::Matrix3d stationary_root = Eigen::Matrix3d::Zero();
  Eigen::Vector3d force_state = Eigen::Vector3d::Zero();
  Eigen::Vector2d force_integral = Eigen::Vector2d::Zero();
  std::vector<double> force;  // per-step average of f_sa
  Eigen::Vector3d periodic_start = Eigen::Vector3d::Zero();

  void integrate(const Eigen::Vector3d& x0, std::mt19937_64* gen, Trajectory& out,
                 Eigen::Vector3d* end) const;
};

void Simulator::Impl::integrate(const Eigen::Vector3d& x0, std::mt19937_64* gen,
                                Trajectory& out, Eigen::Vector3d* end) const {
  const double h = step.h;
  const double rp = model.root_gamma0_plus;
  const double rm = model.root_gamma0_minus;
  const Eigen::Matrix3d& phi = step.phi;
  const Eigen::Matrix<double, 2, 3> phi1 = step.phi1.topRows<2>();
  std::normal_distribution<double> normal;
  Eigen::VectorXd xi(root.cols());
  Eigen::Matrix<double, 7, 1> z = Eigen::Matrix<double, 7, 1>::Zero();

  out.b_plus.assign(samples, 0.0);
  out.b_minus.assign(samples, 0.0);
  Eigen::Vector3d x = x0;
  for (std::size_t n = 0; n < samples; ++n) {
    if (gen != nullptr) {
      for (Eigen::Index i = 0; i < xi.size(); ++i) xi(i) = normal(*gen);
      z.noalias() = root * xi;
    }
    const double f = force.empty() ? 0.0 : force[n];
    Eigen::Vector2d integral = phi1 * x + z.segment<2>(3);
    if (f != 0.0) integral += force_integral * f;
    out.b_plus[n] = (-z(5) + rp * integral(0)) / h;
    out.b_minus[n] = (-z(6) + rm * integral(1)) / h;
    Eigen::Vector3d next = phi * x + z.head<3>();
    if (f != 0.0) next += force_state * f;
    x = next;
    if (n % kCheckEvery == 0 || n + 1 == samples) {
      if (!x.allFinite() || x.norm() > kDivergence) {
        throw NumericalError("trajectory " + std::to_string(out.index) +
                             " diverged at t = " + describe(static_cast<double>(n) * h) + " s");
      }
    }
  }
  if (end != nullptr) *end = x;
}

Simulator::Simulator(const DerivedParams& d, const SimConfig& resolved)
    : impl_(std::make_unique<Impl>()) {
  Impl& s = *impl_;
  s.cfg = resolved;
  s.model = LinearModel::from(d);
  s.step = discretize(s.model, resolved.dt);
  s.samples = static_cast<std::size_t>(std::floor(resolved.duration / resolved.dt));

  const auto& r = s.step.noise_root;
  s.root.resize(7, r.cols());
  s.root.topRows<3>() = r.topRows<3>();
  s.root.row(3) = r.row(3);
  s.root.row(4) = r.row(4);
  s.root.row(5) = r.row(6 + LinearModel::kAPlus);
  s.root.row(6) = r.row(6 + LinearModel::kAMinus);

  if (resolved.noise) {
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(stationary_covariance(s.model));
    const Eigen::Vector3d lambda = es.eigenvalues().cwiseMax(0.0);
    s.stationary_root = es.eigenvectors() * lambda.cwiseSqrt().asDiagonal();
  }

  s.force_state = s.step.phi1 * s.model.force;
  s.force_integral = (s.step.phi2 * s.model.force).head<2>();
  if (resolved.signal) {
    const PulseSignal& p = *resolved.signal;
    const double value = p.value();
    const double h = resolved.dt;
    s.force.assign(s.samples, 0.0);
    const double t0 = p.start;
    const double t1 = p.start + p.duration;
    for (std::size_t n = 0; n < s.samples; ++n) {
      const double a = static_cast<double>(n) * h;
      const double overlap = std::min(a + h, t1) - std::max(a, t0);
      if (overlap > 0.0) s.force[n] = value * std::min(1.0, overlap / h);
    }
  }

  if (resolved.periodic) {
    Trajectory scratch;
    Eigen::Vector3d forced;
    s.integrate(Eigen::Vector3d::Zero(), nullptr, scratch, &forced);
    const Eigen::Matrix3d decay =
        (s.model.drift * (static_cast<double>(s.samples) * resolved.dt)).exp();
    s.periodic_start = (Eigen::Matrix3d::Identity() - decay).fullPivLu().solve(forced);
  }
}

Simulator::~Simulator() = default;
Simulator::Simulator(Simulator&&) noexcept = default;
Simulator& Simulator::operator=(Simulator&&) noexcept = default;

std::size_t Simulator::samples() const { return impl_->samples; }

std::vector<double> Simulator::times() const {
  std::vector<double> t(impl_->samples);
  for (std::size_t n = 0; n < t.size(); ++n) {
    t[n] = (static_cast<double>(n) + 0.5) * impl_->cfg.dt;
  }
  return t;
}

Trajectory Simulator::run(std::size_t index) const {
  const Impl& s = *impl_;
  Trajectory t;
  t.index = index;
  t.seed = trajectory_seed(s.cfg.seed, index);
  if (!s.cfg.noise) {
    s.integrate(s.periodic_start, nullptr, t, nullptr);
    return t;
  }
  std::mt19937_64 gen(t.seed);
  std::normal_distribution<double> normal;
  Eigen::Vector3d u;
  for (int i = 0; i < 3; ++i) u(i) = normal(gen);
  s.integrate(s.stationary_root * u, &gen, t, nullptr);
  return t;
}

TimeSeriesBundle simulate(const DerivedParams& d, const SimConfig& cfg) {
  const SimConfig resolved = resolve(d, cfg);
  const Simulator sim(d, resolved);
  TimeSeriesBundle b;
  b.dt = resolved.dt;
  b.times = sim.times();
  b.scenario = resolved.scenario;
  b.trajectories.reserve(resolved.trajectories);
  for (std::size_t i = 0; i < resolved.trajectories; ++i) b.trajectories.push_back(sim.run(i));
  return b;
}

}  // namespace optotriplet
