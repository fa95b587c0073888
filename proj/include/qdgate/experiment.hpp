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

// Gate runner and parameter sweeps.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qdgate/environment.hpp"
#include "qdgate/errors.hpp"
#include "qdgate/lindblad.hpp"
#include "qdgate/pulse.hpp"
#include "qdgate/system_model.hpp"

namespace qdgate {

/// Ordered name -> value list; order is the output column order.
using Metrics = std::vector<std::pair<std::string, double>>;

inline std::optional<double> find_metric(const Metrics& m, const std::string& name) {
  for (const auto& [k, v] : m)
    if (k == name) return v;
  return std::nullopt;
}

struct RunRecord {
  GateSpec spec;  // resolved: calibrated pulse for adiabatic gates
  Metrics metrics;
  std::optional<Trajectory> trajectory;
  double wall_ms = 0.0;
  std::string error;  // non-empty when the run failed (sweeps only)
};

/// Every metric run_gate reports, in column order.
inline const std::vector<std::string>& all_metric_names() {
  static const std::vector<std::string> names{"fidelity",   "purity_final", "purity_min", "xi_numeric",
                                              "xi_analytic", "tau",          "adiabaticity_max",
                                              "popx_final"};
  return names;
}

inline GeneratorContext make_context(const GateSpec& spec) {
  GeneratorContext ctx;
  ctx.pulse = spec.pulse;
  ctx.gamma0 = spec.gamma0;
  ctx.spectral = build_spectral_model(spec.material);
  ctx.temperature = spec.temperature;
  ctx.channels = spec.channels;
  ctx.scale_multiplier = spec.spectral_scale;
  ctx.piezo_prefactor = spec.piezo_prefactor;
  return ctx;
}

/// Fills in the pulse for the spec's mode: calibrated Gaussian width for
/// adiabatic gates, the 2pi duration for dynamic ones.
inline GateSpec resolve(GateSpec spec) {
  validate(spec);
  if (spec.mode == GateMode::kDynamic) {
    spec.pulse = PulseSchedule::square(spec.pulse.omega0, 0.0, dynamic_duration(spec.pulse.omega0));
  } else if (spec.calibrate) {
    spec.pulse = calibrate_tau(spec.pulse.omega0, spec.pulse.delta, spec.target_phase);
  } else if (!(spec.pulse.tau > 0.0)) {
    throw ConfigError("uncalibrated adiabatic gate needs tau > 0 ps");
  } else {
    spec.pulse = PulseSchedule::gaussian(spec.pulse.omega0, spec.pulse.delta, spec.pulse.tau);
  }
  return spec;
}

/// Runs R_Z on |psi+> and scores the output against |psi->.
inline RunRecord run_gate(const GateSpec& input, bool keep_trajectory = false) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord rec;
  rec.spec = resolve(input);
  const GateSpec& spec = rec.spec;
  const GeneratorContext ctx = make_context(spec);

  Trajectory traj = integrate(ctx, OperatorMatrix::projector(kPsiPlus), spec.pulse.t_start, spec.pulse.t_end,
                              spec.solver);
  const OperatorMatrix& rho = traj.final_state();

  double purity_min = 1.0;
  for (const auto& s : traj.samples) purity_min = std::min(purity_min, s.purity);
  const double xi_analytic = spec.mode == GateMode::kDynamic
                                 ? expected_decays_dynamic(spec.pulse.omega0, spec.gamma0)
                                 : expected_decays_adiabatic(spec.pulse.delta, spec.gamma0);

  rec.metrics = {{"fidelity", fidelity_to(rho, kPsiMinus)},
                 {"purity_final", purity(rho)},
                 {"purity_min", purity_min},
                 {"xi_numeric", expected_decays_numeric(traj)},
                 {"xi_analytic", xi_analytic},
                 {"tau", spec.pulse.tau},
                 {"adiabaticity_max", max_adiabaticity(spec.pulse)},
                 {"popx_final", traj.samples.back().popx}};
  if (keep_trajectory) rec.trajectory = std::move(traj);
  rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

// ---------------------------------------------------------------------------

enum class SweepVariable { kDelta, kOmega, kTemperature };

struct SweepSpec {
  SweepVariable variable = SweepVariable::kDelta;
  std::vector<double> grid;
  GateSpec fixed;
  std::vector<std::string> outputs{"fidelity"};

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

enum class GridSpacing { kLinear, kLog };

inline std::vector<double> make_grid(double min, double max, int count, GridSpacing spacing) {
  if (count < 1) throw ConfigError("grid count must be >= 1");
  if (count == 1) return {min};
  if (spacing == GridSpacing::kLog && !(min > 0.0 && max > 0.0)) throw ConfigError("log grid needs min, max > 0");
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) {
    const double f = static_cast<double>(i) / (count - 1);
    g[i] = spacing == GridSpacing::kLinear ? min + (max - min) * f : min * std::pow(max / min, f);
  }
  g.back() = max;
  return g;
}

inline void validate(const SweepSpec& s) {
  if (s.grid.empty()) throw ConfigError("sweep grid must be non-empty");
  const bool up = s.grid.size() < 2 || s.grid[1] > s.grid[0];
  for (std::size_t i = 1; i < s.grid.size(); ++i)
    if (up ? !(s.grid[i] > s.grid[i - 1]) : !(s.grid[i] < s.grid[i - 1]))
      throw ConfigError("sweep grid must be strictly monotone");
  const auto& known = all_metric_names();
  for (const auto& o : s.outputs)
    if (std::find(known.begin(), known.end(), o) == known.end()) throw ConfigError("unknown sweep output '" + o + "'");
}

/// The gate evaluated at one grid point.
inline GateSpec sweep_point(const SweepSpec& s, double value) {
  GateSpec g = s.fixed;
  switch (s.variable) {
    case SweepVariable::kDelta:
      g.pulse.delta = value;
      break;
    case SweepVariable::kOmega:
      g.pulse.omega0 = value;
      break;
    case SweepVariable::kTemperature:
      g.temperature = value;
      break;
  }
  return g;
}

/// One record per grid point, in grid order. Points run on up to `threads`
/// workers; a failing point carries its error message instead of aborting.
inline std::vector<RunRecord> sweep(const SweepSpec& s, unsigned threads = 1) {
  validate(s);
  std::vector<RunRecord> out(s.grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < out.size(); i = next++) {
      const GateSpec point = sweep_point(s, s.grid[i]);
      try {
        out[i] = run_gate(point);
      } catch (const Error& e) {
        out[i].spec = point;
        out[i].error = e.what();
      }
    }
  };
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(out.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  return out;
}

}  // namespace qdgate
