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

#include <numbers>

// Internal unit system: energies in meV, times in ps, rates in 1/ps.
// An energy E in meV corresponds to the angular frequency E / kHbar in rad/ps.
namespace qdgate::units {

inline constexpr double kHbar = 0.6582119569;       // meV ps
inline constexpr double kBoltzmann = 0.08617333262;  // meV / K

// SI values used once when reducing material parameters.
namespace si {
inline constexpr double kHbar = 1.054571817e-34;            // J s
inline constexpr double kElectronMass = 9.1093837015e-31;   // kg
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C
}  // namespace si

inline constexpr double kPi = std::numbers::pi;

/// meV -> rad/ps
constexpr double to_angular(double energy_mev) { return energy_mev / kHbar; }

/// rad/ps -> meV
constexpr double to_mev(double angular_per_ps) { return angular_per_ps * kHbar; }

}  // namespace qdgate::units
