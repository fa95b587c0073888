// Copyright 2026 The qdgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdgate/pulse.hpp"

#include <vector>

#include "gtest/gtest.h"

namespace qdgate {
namespace {

constexpr double kPi = units::kPi;
constexpr double kHbar = units::kHbar;

double slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= y.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    sxx += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return sxy / sxx;
}

TEST(Envelope, Gaussian) {
  const PulseSchedule p = PulseSchedule::gaussian(2.0, 5.0, 10.0);
  EXPECT_EQ(omega_at(p, 0.0), 2.0);
  EXPECT_NEAR(omega_at(p, 10.0), 2.0 / std::exp(1.0), 1e-15);
  EXPECT_NEAR(omega_at(p, 30.0), 2.0 * std::exp(-9.0), 1e-18);
  EXPECT_NEAR(omega_at(p, -30.0) / 2.0, 1.23e-4, 1e-6);
  EXPECT_EQ(p.t_start, -30.0);
  EXPECT_EQ(p.t_end, 30.0);
  for (double t = 0.0; t < 30.0; t += 0.7) EXPECT_EQ(omega_at(p, t), omega_at(p, -t));
}

TEST(Envelope, Square) {
  const PulseSchedule p = PulseSchedule::square(0.3, 0.0, 12.0);
  EXPECT_EQ(omega_at(p, -0.1), 0.0);
  EXPECT_EQ(omega_at(p, 0.0), 0.3);
  EXPECT_EQ(omega_at(p, 6.0), 0.3);
  EXPECT_EQ(omega_at(p, 12.0), 0.3);
  EXPECT_EQ(omega_at(p, 12.1), 0.0);
}

TEST(Adiabaticity, SquareInteriorAndGaussianPeakVanish) {
  EXPECT_EQ(adiabaticity_parameter(PulseSchedule::square(0.3, 1.0, 12.0), 5.0), 0.0);
  EXPECT_EQ(adiabaticity_parameter(PulseSchedule::gaussian(1.0, 5.0, 30.0), 0.0), 0.0);
}

TEST(Adiabaticity, OddInTime) {
  const PulseSchedule p = PulseSchedule::gaussian(1.0, 5.0, 30.0);
  for (double t = 1.0; t < 90.0; t += 3.3)
    EXPECT_NEAR(adiabaticity_parameter(p, t), -adiabaticity_parameter(p, -t), 1e-18);
}

TEST(Adiabaticity, MatchesThetaDotOverSplitting) {
  // Finite-difference theta_dot / Lambda with Lambda in rad/ps.
  const PulseSchedule p = PulseSchedule::gaussian(1.5, 3.0, 20.0);
  for (double t : {-25.0, -8.0, 4.0, 17.0}) {
    const double h = 1e-4;
    const double theta_dot = (mixing_angle({omega_at(p, t + h), p.delta}) -
                              mixing_angle({omega_at(p, t - h), p.delta})) / (2 * h);
    const double lambda = units::to_angular(std::hypot(p.delta, omega_at(p, t)));
    EXPECT_NEAR(adiabaticity_parameter(p, t), theta_dot / lambda, 1e-9);
  }
}

TEST(Adiabaticity, MaxScalesAsOmegaOverDeltaSquaredTau) {
  std::vector<double> taus, maxima;
  for (double tau = 5.0; tau <= 500.0; tau *= 1.6) {
    taus.push_back(tau);
    maxima.push_back(max_adiabaticity(PulseSchedule::gaussian(0.5, 10.0, tau)));
  }
  EXPECT_NEAR(slope(taus, maxima), -1.0, 1e-6);

  // max * tau * delta^2 / omega0 is constant in the weak-drive limit:
  // hbar sqrt(2) e^{-1/2} / 2.
  const double limit = kHbar * std::sqrt(2.0) * std::exp(-0.5) / 2.0;
  for (double delta = 5.0; delta <= 50.0; delta *= 1.5) {
    const double tau = 100.0;
    const double m = max_adiabaticity(PulseSchedule::gaussian(0.5, delta, tau));
    EXPECT_NEAR(m * tau * delta * delta / 0.5, limit, 0.02 * limit) << delta;
  }
}

TEST(Phase, ZeroDrive) {
  EXPECT_EQ(accumulated_phase(PulseSchedule::gaussian(0.0, 5.0, 10.0)), 0.0);
}

TEST(Phase, WeakDriveClosedForm) {
  // phase ~ omega0^2 / (4 delta) tau sqrt(pi/2) in angular units.
  for (double delta : {5.0, 10.0, 20.0})
    for (double omega0 : {0.1, 0.5, 1.0}) {
      const double tau = 50.0;
      const double closed = omega0 * omega0 / (4.0 * delta) / kHbar * tau * std::sqrt(kPi / 2.0);
      const double x = omega0 / delta;
      const double phase = accumulated_phase(PulseSchedule::gaussian(omega0, delta, tau));
      EXPECT_LT(std::abs(phase - closed) / closed, x * x) << delta << " " << omega0;
    }
}

TEST(Phase, IncreasingInTau) {
  double prev = 0.0;
  for (double tau = 1.0; tau < 200.0; tau *= 1.3) {
    const double phase = accumulated_phase(PulseSchedule::gaussian(1.0, 4.0, tau));
    EXPECT_GT(phase, prev);
    prev = phase;
  }
}

TEST(Calibration, HitsTargetPhase) {
  const PulseSchedule p = calibrate_tau(1.0, 10.0, kPi);
  EXPECT_NEAR(accumulated_phase(p), kPi, 1e-9);
  EXPECT_EQ(p.kind, PulseKind::kGaussian);
  EXPECT_EQ(p.t_start, -3.0 * p.tau);
  EXPECT_LT(std::abs(p.tau - tau_seed(1.0, 10.0, kPi)) / tau_seed(1.0, 10.0, kPi), 0.05);
}

TEST(Calibration, DoublingPhaseDoublesTau) {
  const double t1 = calibrate_tau(0.5, 10.0, kPi).tau;
  const double t2 = calibrate_tau(0.5, 10.0, 2 * kPi).tau;
  EXPECT_NEAR(t2 / t1, 2.0, 1e-8);
}

TEST(Calibration, CloseToSeedInWeakDrive) {
  for (double x : {0.02, 0.05, 0.1}) {
    const double delta = 10.0, omega0 = x * delta;
    const double seed = tau_seed(omega0, delta, kPi);
    const double tau = calibrate_tau(omega0, delta, kPi).tau;
    EXPECT_LT(std::abs(tau - seed) / seed, x * x) << x;
  }
}

TEST(Calibration, GateTimeProportionalToDetuning) {
  std::vector<double> deltas, taus;
  for (double delta = 5.0; delta <= 40.0 + 1e-9; delta *= std::pow(8.0, 1.0 / 7.0)) {
    deltas.push_back(delta);
    taus.push_back(calibrate_tau(1.0, delta, kPi).tau);
  }
  EXPECT_NEAR(slope(deltas, taus), 1.0, 0.05);
}

TEST(Calibration, RejectsBadInput) {
  EXPECT_THROW(calibrate_tau(0.0, 10.0, kPi), ConfigError);
  EXPECT_THROW(calibrate_tau(1.0, 0.0, kPi), ConfigError);
  EXPECT_THROW(calibrate_tau(1.0, 10.0, -1.0), ConfigError);
}

TEST(DynamicDuration, TwoPiPulse) {
  EXPECT_NEAR(dynamic_duration(0.1), 41.36, 0.005);
  EXPECT_NEAR(dynamic_duration(0.2), 0.5 * dynamic_duration(0.1), 1e-12);
}

TEST(GateSpec, Validation) {
  GateSpec g = GateSpec::adiabatic(1.0, 10.0);
  EXPECT_NO_THROW(validate(g));
  g.temperature = -1.0;
  EXPECT_THROW(validate(g), ConfigError);

  GateSpec d = GateSpec::dynamic(0.1);
  EXPECT_NO_THROW(validate(d));
  d.pulse.delta = 1.0;
  EXPECT_THROW(validate(d), ConfigError);
}

}  // namespace
}  // namespace qdgate
