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

// Driven three-level dot {|0>, |1>, |X>} in the laser rotating frame:
// Hamiltonian, dressed-state geometry and the closed-form radiative analytics.

#pragma once

#include <cmath>
#include <sstream>

#include "qdgate/errors.hpp"
#include "qdgate/operator.hpp"
#include "qdgate/units.hpp"

namespace qdgate {

/// Instantaneous drive: Rabi coupling and detuning, both in meV.
struct DriveParams {
  double omega = 0.0;  // >= 0
  double delta = 0.0;
};

/// Dressed-state geometry of the {|1>, |X>} block.
struct DressedFrame {
  double theta = 0.0;      // mixing angle, rad
  double lambda = 0.0;     // splitting sqrt(delta^2 + omega^2), meV
  double e_minus = 0.0;    // energy of |-> relative to |0>, meV
  double lam_minus = 0.0;  // == e_minus
  double lam_plus = 0.0;
};

/// H = delta |X><X| + omega/2 (|1><X| + |X><1|), in meV.
inline OperatorMatrix build_hamiltonian(const DriveParams& p) {
  OperatorMatrix h;
  h(kTrion, kTrion) = p.delta;
  h(kOne, kTrion) = 0.5 * p.omega;
  h(kTrion, kOne) = 0.5 * p.omega;
  return h;
}

/// Mixing angle with the two-argument arctangent: continuous through
/// resonance and in [0, pi/2) for delta > 0.
inline double mixing_angle(const DriveParams& p) { return 0.5 * std::atan2(p.omega, p.delta); }

inline DressedFrame dressed_frame(const DriveParams& p) {
  if (p.omega == 0.0 && p.delta == 0.0) throw UndefinedFrameError("dressed_frame: omega = delta = 0");
  if (p.omega < 0.0) {
    std::ostringstream os;
    os << "dressed_frame: omega must be >= 0 meV, got " << p.omega;
    throw UndefinedFrameError(os.str());
  }
  DressedFrame f;
  f.theta = mixing_angle(p);
  f.lambda = std::hypot(p.delta, p.omega);
  f.lam_minus = 0.5 * (p.delta - f.lambda);
  f.lam_plus = 0.5 * (p.delta + f.lambda);
  f.e_minus = f.lam_minus;
  return f;
}

/// Exact light shift E_m = (delta - sqrt(delta^2 + omega^2)) / 2, meV.
/// Defined for all inputs (zero when undriven).
inline double energy_shift(const DriveParams& p) {
  const double lambda = std::hypot(p.delta, p.omega);
  // Cancellation-free form of (delta - lambda) / 2 for delta > 0.
  if (p.delta > 0.0) return -0.5 * p.omega * p.omega / (p.delta + lambda);
  return 0.5 * (p.delta - lambda);
}

/// Unitary whose columns are the dressed vectors |0>, |->, |+> written in
/// the bare basis: |-> = cos|1> - sin|X>, |+> = sin|1> + cos|X>.
inline OperatorMatrix dressed_transform(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  OperatorMatrix u;
  u(kZero, 0) = 1.0;
  u(kOne, 1) = c;
  u(kTrion, 1) = -s;
  u(kOne, 2) = s;
  u(kTrion, 2) = c;
  return u;
}

/// Total radiative rate out of |-> into the next manifold.
inline double gamma_minus(double theta, double gamma0) {
  const double s = std::sin(theta);
  return gamma0 * s * s;
}

/// Leading order of gamma_minus in omega/delta.
inline double gamma_minus_expansion(const DriveParams& p, double gamma0) {
  const double x = p.omega / p.delta;
  return 0.25 * gamma0 * x * x;
}

/// Leading order of E_m in omega/delta. Returned with the sign of the exact
/// shift (<= 0); the gate-time relation only uses its magnitude.
inline double e_minus_expansion(const DriveParams& p) { return -0.25 * p.omega * (p.omega / p.delta); }

/// Expected radiative decays during a resonant square 2pi pulse: pi gamma0 / omega.
inline double expected_decays_dynamic(double omega_mev, double gamma0) {
  return units::kPi * gamma0 / units::to_angular(omega_mev);
}

/// Expected radiative decays during an adiabatic R_Z(pi): pi gamma0 / delta.
inline double expected_decays_adiabatic(double delta_mev, double gamma0) {
  return units::kPi * gamma0 / units::to_angular(delta_mev);
}

}  // namespace qdgate
