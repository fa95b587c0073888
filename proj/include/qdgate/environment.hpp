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

// Deformation-potential phonon bath of a GaAs dot.
//
// Carrier wavefunctions are harmonic-oscillator ground states of width
// d = (hbar / sqrt(m c))^{1/2}. With a linear dispersion omega = c_s |q| the
// spectral density is super-Ohmic,
//
//   J(w) = D_e^2 w^3 / (2 mu c_s^5)
//          [exp(-w^2/w_e^2) - 2 (D_h/D_e) exp(-w^2/w_eh^2) + (D_h/D_e)^2 exp(-w^2/w_h^2)],
//
// with cutoffs w_{e,h} = sqrt(2) c_s / d_{e,h} and w_eh = 2 c_s / sqrt(d_e^2 + d_h^2).
// All SI inputs are reduced once, in build_spectral_model, so that J takes
// an energy in meV and returns a rate in 1/ps.

#pragma once

#include <cmath>
#include <sstream>

#include "qdgate/errors.hpp"
#include "qdgate/units.hpp"

namespace qdgate {

/// Bulk material constants. Defaults are GaAs.
struct MaterialParams {
  double d_e_coupling = 14.6;    // eV
  double d_h_coupling = 4.8;     // eV
  double mass_density = 5.3;     // g/cm^3
  double sound_speed = 4.8e5;    // cm/s
  double m_e_eff = 0.067;        // m_0
  double m_h_eff = 0.34;         // m_0
  double confinement = 8.3e-3;   // J/m^2

  friend bool operator==(const MaterialParams&, const MaterialParams&) = default;
};

struct SpectralModel {
  MaterialParams params;
  double d_e = 0.0;  // nm
  double d_h = 0.0;  // nm
  double w_e = 0.0;  // meV
  double w_h = 0.0;  // meV
  double w_eh = 0.0;  // meV
  double prefactor = 0.0;  // 1/ps per meV^3
  double hole_ratio = 0.0;  // D_h / D_e
};

inline void validate(const MaterialParams& p) {
  const double values[] = {p.d_e_coupling, p.d_h_coupling, p.mass_density, p.sound_speed,
                           p.m_e_eff,      p.m_h_eff,      p.confinement};
  for (double v : values)
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError("material parameters must all be finite and > 0");
}

inline SpectralModel build_spectral_model(const MaterialParams& p) {
  validate(p);
  namespace si = units::si;
  const double c_s = p.sound_speed * 1e-2;     // m/s
  const double mu = p.mass_density * 1e3;      // kg/m^3
  const double d_e_j = p.d_e_coupling * si::kElementaryCharge;
  const double width_e = std::sqrt(si::kHbar / std::sqrt(p.m_e_eff * si::kElectronMass * p.confinement));
  const double width_h = std::sqrt(si::kHbar / std::sqrt(p.m_h_eff * si::kElectronMass * p.confinement));
  const double joule_per_mev = 1e-3 * si::kElementaryCharge;
  auto mev = [&](double angular_si) { return si::kHbar * angular_si / joule_per_mev; };

  SpectralModel m;
  m.params = p;
  m.d_e = width_e * 1e9;
  m.d_h = width_h * 1e9;
  m.w_e = mev(std::sqrt(2.0) * c_s / width_e);
  m.w_h = mev(std::sqrt(2.0) * c_s / width_h);
  m.w_eh = mev(2.0 * c_s / std::sqrt(width_e * width_e + width_h * width_h));
  m.hole_ratio = p.d_h_coupling / p.d_e_coupling;

  // J[1/s] = D_e^2 w^3 / (2 mu hbar c_s^5), w in rad/s.
  const double pref_si = d_e_j * d_e_j / (2.0 * mu * si::kHbar * std::pow(c_s, 5));
  const double angular_per_mev = joule_per_mev / si::kHbar;
  m.prefactor = pref_si * std::pow(angular_per_mev, 3) * 1e-12;
  return m;
}

namespace detail {
inline double cutoff_bracket(const SpectralModel& m, double omega, double hole_weight) {
  const double x2 = omega * omega;
  return std::exp(-x2 / (m.w_e * m.w_e)) - 2.0 * hole_weight * std::exp(-x2 / (m.w_eh * m.w_eh)) +
         hole_weight * hole_weight * std::exp(-x2 / (m.w_h * m.w_h));
}
}  // namespace detail

/// Deformation-potential J(omega), omega in meV, result in 1/ps.
inline double spectral_density(const SpectralModel& m, double omega) {
  if (omega <= 0.0) return 0.0;
  return m.prefactor * omega * omega * omega * detail::cutoff_bracket(m, omega, m.hole_ratio);
}

/// Optional piezoelectric channel with the same cutoffs and unit weights.
/// `prefactor` is the reduced coupling in 1/ps per meV^3.
inline double spectral_density_piezo(const SpectralModel& m, double omega, double prefactor) {
  if (omega <= 0.0) return 0.0;
  return prefactor * omega * omega * omega * detail::cutoff_bracket(m, omega, 1.0);
}

/// Bose-Einstein occupation, omega in meV, temperature in K.
inline double bose_occupation(double omega, double temperature) {
  if (!(omega > 0.0)) {
    std::ostringstream os;
    os << "bose_occupation: omega must be > 0 meV, got " << omega;
    throw Error(os.str());
  }
  if (temperature <= 0.0) return 0.0;
  const double x = omega / (units::kBoltzmann * temperature);
  if (x > 700.0) return 0.0;
  return 1.0 / std::expm1(x);
}

}  // namespace qdgate
