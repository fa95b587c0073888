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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "qdgate/environment.hpp"
#include "qdgate/errors.hpp"
#include "qdgate/system_model.hpp"
#include "qdgate/units.hpp"

namespace qdgate {

enum class PulseKind { kGaussian, kSquare };

/// Integration window of a Gaussian pulse in units of tau, on each side.
inline constexpr double kGaussianWindowWidths = 3.0;

/// Drive envelope at constant detuning.
///
/// Gaussian: omega(t) = omega0 exp[-(t/tau)^2] on [-3 tau, 3 tau].
/// Square: omega(t) = omega0 on [t_start, t_end] (tau holds the duration).
struct PulseSchedule {
  PulseKind kind = PulseKind::kGaussian;
  double omega0 = 0.0;  // meV
  double delta = 0.0;   // meV
  double tau = 0.0;     // ps
  double t_start = 0.0;  // ps
  double t_end = 0.0;    // ps

  friend bool operator==(const PulseSchedule&, const PulseSchedule&) = default;

  static PulseSchedule gaussian(double omega0, double delta, double tau) {
    return {PulseKind::kGaussian, omega0, delta, tau, -kGaussianWindowWidths * tau, kGaussianWindowWidths * tau};
  }

  static PulseSchedule square(double omega0, double delta, double duration) {
    return {PulseKind::kSquare, omega0, delta, duration, 0.0, duration};
  }

  double duration() const { return t_end - t_start; }
};

inline double omega_at(const PulseSchedule& p, double t) {
  switch (p.kind) {
    case PulseKind::kGaussian: {
      const double x = t / p.tau;
      return p.omega0 * std::exp(-x * x);
    }
    case PulseKind::kSquare:
      return (t >= p.t_start && t <= p.t_end) ? p.omega0 : 0.0;
  }
  return 0.0;
}

/// d omega / dt in meV/ps. Zero for the square pulse (edges are handled by
/// splitting the integration there).
inline double omega_rate_at(const PulseSchedule& p, double t) {
  if (p.kind == PulseKind::kSquare) return 0.0;
  return -2.0 * t / (p.tau * p.tau) * omega_at(p, t);
}

/// theta_dot / Lambda written in drive variables:
/// (omega_dot delta - omega delta_dot) / (2 (delta^2 + omega^2)^{3/2}).
/// Energies in meV, rates in meV/ps; the result is dimensionless.
inline double adiabaticity_parameter(double omega, double omega_dot, double delta, double delta_dot) {
  const double lambda = std::hypot(delta, omega);
  if (lambda == 0.0) return 0.0;
  return units::kHbar * (omega_dot * delta - omega * delta_dot) / (2.0 * lambda * lambda * lambda);
}

inline double adiabaticity_parameter(const PulseSchedule& p, double t) {
  return adiabaticity_parameter(omega_at(p, t), omega_rate_at(p, t), p.delta, 0.0);
}

/// max_t |adiabaticity_parameter| over the window: grid scan refined with Brent.
inline double max_adiabaticity(const PulseSchedule& p) {
  if (p.kind == PulseKind::kSquare) return 0.0;
  constexpr int kGrid = 2000;
  const double h = p.duration() / kGrid;
  int best = 0;
  double best_val = -1.0;
  for (int i = 0; i <= kGrid; ++i) {
    const double v = std::abs(adiabaticity_parameter(p, p.t_start + i * h));
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  const double lo = std::max(p.t_start, p.t_start + (best - 1) * h);
  const double hi = std::min(p.t_end, p.t_start + (best + 1) * h);
  const auto r = boost::math::tools::brent_find_minima(
      [&](double t) { return -std::abs(adiabaticity_parameter(p, t)); }, lo, hi, 50);
  return std::max(best_val, -r.second);
}

/// Dynamical phase of |1> relative to |0>: -(1/hbar) integral of E_m dt over
/// the window, positive for delta > 0.
inline double accumulated_phase(const PulseSchedule& p) {
  if (p.omega0 == 0.0) return 0.0;
  if (p.kind == PulseKind::kSquare)
    return -energy_shift({p.omega0, p.delta}) * p.duration() / units::kHbar;
  auto integrand = [&](double t) { return -energy_shift({omega_at(p, t), p.delta}); };
  double error = 0.0;
  const double integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, p.t_start, p.t_end, 20, 1e-10, &error);
  return integral / units::kHbar;
}

/// Small-drive estimate of the Gaussian width that accumulates target_phase:
/// phase ~ omega0^2 / (4 delta hbar) * tau sqrt(pi/2).
inline double tau_seed(double omega0, double delta, double target_phase) {
  return target_phase * 4.0 * delta * units::kHbar / (omega0 * omega0 * std::sqrt(units::kPi / 2.0));
}

/// Gaussian pulse whose accumulated phase equals target_phase within 1e-9 rad.
inline PulseSchedule calibrate_tau(double omega0, double delta, double target_phase) {
  if (!(omega0 > 0.0) || !(delta > 0.0) || !(target_phase > 0.0)) {
    std::ostringstream os;
    os << "calibrate_tau: need omega0 > 0 meV, delta > 0 meV, target_phase > 0 rad (got " << omega0 << ", "
       << delta << ", " << target_phase << ")";
    throw ConfigError(os.str());
  }
  auto residual = [&](double tau) { return accumulated_phase(PulseSchedule::gaussian(omega0, delta, tau)) - target_phase; };

  const double seed = tau_seed(omega0, delta, target_phase);
  double lo = 0.5 * seed;
  double hi = 2.0 * seed;
  double f_lo = residual(lo);
  double f_hi = residual(hi);
  for (int i = 0; i < 60 && f_lo > 0.0; ++i) {
    hi = lo;
    f_hi = f_lo;
    lo *= 0.5;
    f_lo = residual(lo);
  }
  for (int i = 0; i < 60 && f_hi < 0.0; ++i) {
    lo = hi;
    f_lo = f_hi;
    hi *= 2.0;
    f_hi = residual(hi);
  }
  if (f_lo > 0.0 || f_hi < 0.0) throw SolverError("calibrate_tau: could not bracket the target phase");

  std::uintmax_t iterations = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(residual, lo, hi, f_lo, f_hi,
                                                        boost::math::tools::eps_tolerance<double>(50), iterations);
  if (iterations >= 200) throw SolverError("calibrate_tau: root finder did not converge");

  const double tau = std::abs(residual(a)) <= std::abs(residual(b)) ? a : b;
  if (std::abs(residual(tau)) > 1e-9) {
    std::ostringstream os;
    os << "calibrate_tau: phase residual " << residual(tau) << " rad exceeds 1e-9";
    throw SolverError(os.str());
  }
  return PulseSchedule::gaussian(omega0, delta, tau);
}

/// Length of a resonant square 2pi pulse, in ps.
inline double dynamic_duration(double omega_mev) { return 2.0 * units::kPi / units::to_angular(omega_mev); }

// ---------------------------------------------------------------------------

enum class GateMode { kAdiabatic, kDynamic };

struct Channels {
  bool radiative = true;
  bool phonon = true;
  bool piezo = false;

  friend bool operator==(const Channels&, const Channels&) = default;
};

struct SolverOptions {
  double tol_rel = 1e-9;
  double tol_abs = 1e-12;
  int samples = 2000;
  long max_steps = 50'000'000;

  friend bool operator==(const SolverOptions&, const SolverOptions&) = default;
};

/// A complete gate experiment. For adiabatic gates the pulse width is
/// recalibrated to target_phase before integration unless `calibrate` is off.
struct GateSpec {
  GateMode mode = GateMode::kAdiabatic;
  PulseSchedule pulse;
  double gamma0 = 0.01;      // 1/ps
  double temperature = 0.0;  // K
  double target_phase = units::kPi;
  Channels channels;
  SolverOptions solver;
  MaterialParams material;
  double spectral_scale = 1.0;   // multiplier on the phonon spectral densities
  double piezo_prefactor = 0.0;  // 1/ps per meV^3, used when channels.piezo is on
  bool calibrate = true;

  friend bool operator==(const GateSpec&, const GateSpec&) = default;

  static GateSpec adiabatic(double omega0, double delta) {
    GateSpec g;
    g.mode = GateMode::kAdiabatic;
    g.pulse = PulseSchedule::gaussian(omega0, delta, tau_seed(omega0, delta, g.target_phase));
    return g;
  }

  /// Resonant square 2pi pulse.
  static GateSpec dynamic(double omega) {
    GateSpec g;
    g.mode = GateMode::kDynamic;
    g.pulse = PulseSchedule::square(omega, 0.0, dynamic_duration(omega));
    return g;
  }
};

/// Throws ConfigError when the spec violates its invariants.
inline void validate(const GateSpec& g) {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };
  if (!(g.pulse.omega0 > 0.0)) fail("omega0_mev must be > 0 meV");
  if (!(g.temperature >= 0.0)) fail("temperature_k must be >= 0 K");
  if (!(g.gamma0 >= 0.0)) fail("gamma0_per_ps must be >= 0 1/ps");
  if (!(g.target_phase > 0.0)) fail("target_phase_rad must be > 0 rad");
  if (!(g.solver.tol_rel > 0.0) || !(g.solver.tol_abs > 0.0)) fail("tol_rel and tol_abs must be > 0");
  if (g.solver.samples < 2) fail("samples must be >= 2");
  if (!(g.spectral_scale >= 0.0)) fail("spectral_scale must be >= 0");
  if (!(g.piezo_prefactor >= 0.0)) fail("piezo_prefactor_per_ps_per_mev3 must be >= 0");
  validate(g.material);
  if (g.mode == GateMode::kDynamic) {
    if (g.pulse.delta != 0.0 || g.pulse.kind != PulseKind::kSquare)
      fail("dynamic gates are resonant square pulses (delta_mev must be 0)");
  } else {
    if (!(g.pulse.delta > 0.0)) fail("adiabatic gates need delta_mev > 0 meV");
    if (g.pulse.kind != PulseKind::kGaussian) fail("adiabatic gates use a Gaussian envelope");
  }
}

}  // namespace qdgate
