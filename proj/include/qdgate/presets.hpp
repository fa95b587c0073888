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

// Canned experiments: expected decays vs detuning, purity traces, and gate
// fidelity vs drive strength or detuning. Grids and Omega0 series values are
// fixed here so runs are reproducible.

#pragma once

#include <string>
#include <vector>

#include "qdgate/experiment.hpp"
#include "qdgate/pulse.hpp"

namespace qdgate::presets {

/// Expected decays of the adiabatic gate vs detuning, radiative channel only.
inline std::vector<SweepSpec> expected_decays() {
  std::vector<SweepSpec> out;
  for (double omega0 : {0.5, 1.0, 2.0}) {
    SweepSpec s;
    s.variable = SweepVariable::kDelta;
    s.grid = make_grid(1.0, 10.0, 19, GridSpacing::kLinear);
    s.fixed = GateSpec::adiabatic(omega0, 10.0);
    s.fixed.channels = {true, false, false};
    s.outputs = {"xi_numeric", "xi_analytic", "tau"};
    out.push_back(s);
  }
  return out;
}

/// Purity traces at 5 K: one dynamic gate and adiabatic gates at several detunings.
inline std::vector<GateSpec> purity_traces() {
  std::vector<GateSpec> out;
  GateSpec dyn = GateSpec::dynamic(0.1);
  dyn.temperature = 5.0;
  out.push_back(dyn);
  for (double delta : {2.0, 5.0, 10.0, 20.0}) {
    GateSpec g = GateSpec::adiabatic(1.0, delta);
    g.temperature = 5.0;
    out.push_back(g);
  }
  return out;
}

/// Dynamic-gate fidelity vs Rabi coupling, log grid 0.01..1 meV.
inline std::vector<SweepSpec> dynamic_fidelity(const std::vector<double>& temperatures = {0.0, 5.0, 10.0}) {
  std::vector<SweepSpec> out;
  for (double temperature : temperatures) {
    SweepSpec s;
    s.variable = SweepVariable::kOmega;
    s.grid = make_grid(0.01, 1.0, 21, GridSpacing::kLog);
    s.fixed = GateSpec::dynamic(0.1);
    s.fixed.temperature = temperature;
    s.outputs = {"fidelity", "purity_final", "xi_numeric", "tau"};
    out.push_back(s);
  }
  return out;
}

/// Adiabatic-gate fidelity vs detuning at omega0 = 1 meV, log grid 1..40 meV.
inline std::vector<SweepSpec> adiabatic_fidelity(const std::vector<double>& temperatures = {0.0, 5.0, 10.0}) {
  std::vector<SweepSpec> out;
  for (double temperature : temperatures) {
    SweepSpec s;
    s.variable = SweepVariable::kDelta;
    s.grid = make_grid(1.0, 40.0, 25, GridSpacing::kLog);
    s.fixed = GateSpec::adiabatic(1.0, 10.0);
    s.fixed.temperature = temperature;
    s.outputs = {"fidelity", "purity_final", "xi_numeric", "tau", "adiabaticity_max"};
    out.push_back(s);
  }
  return out;
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"fig4", "fig5", "fig6-left", "fig6-right"};
  return n;
}

}  // namespace qdgate::presets
