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

// CSV and JSON writers. Data rows use shortest round-trip number formatting
// so identical runs produce byte-identical rows; every file starts with a
// '#' provenance block carrying the resolved configuration.

#pragma once

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qdgate/config.hpp"
#include "qdgate/environment.hpp"
#include "qdgate/experiment.hpp"
#include "qdgate/lindblad.hpp"

namespace qdgate {

inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

/// RFC 4180 field quoting.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i];
  os << "\r\n";
}

/// '#' comment block: tool name, command, resolved configuration.
inline void write_provenance(std::ostream& os, std::string_view command, const nlohmann::ordered_json& config,
                             const std::vector<std::string>& extra = {}) {
  os << "# qdgate " << command << "\r\n";
  os << "# config: " << config.dump() << "\r\n";
  for (const auto& line : extra) os << "# " << line << "\r\n";
}

inline const std::vector<std::string>& trajectory_columns() {
  static const std::vector<std::string> cols{"t_ps",    "t_scaled", "pop0",      "pop1",
                                             "popX",    "re_coh01", "im_coh01",  "purity",
                                             "theta_rad", "lambda_mev", "adiabaticity_param", "decay_integral"};
  return cols;
}

/// Time axis in figure units: adiabatic t/(6 tau) + 1/2 (window -> [0, 1]),
/// dynamic t in units of the 2pi period.
inline double scaled_time(const GateSpec& spec, double t) {
  if (spec.mode == GateMode::kAdiabatic)
    return t / (2.0 * kGaussianWindowWidths * spec.pulse.tau) + 0.5;
  return t / dynamic_duration(spec.pulse.omega0);
}

inline void write_trajectory_csv(std::ostream& os, const RunRecord& rec, const nlohmann::ordered_json& config) {
  if (!rec.trajectory) throw Error("write_trajectory_csv: record has no trajectory");
  write_provenance(os, "purity", config, {"tau_ps: " + format_number(rec.spec.pulse.tau)});
  write_row(os, trajectory_columns());
  for (const Sample& s : rec.trajectory->samples) {
    write_row(os, {format_number(s.t), format_number(scaled_time(rec.spec, s.t)), format_number(s.pop0),
                   format_number(s.pop1), format_number(s.popx), format_number(s.coh01.real()),
                   format_number(s.coh01.imag()), format_number(s.purity), format_number(s.theta),
                   format_number(s.lambda), format_number(s.adiabaticity), format_number(s.decay_integral)});
  }
}

/// One row per run: gate coordinates, the requested metrics, status.
inline void write_sweep_header(std::ostream& os, const std::vector<std::string>& outputs) {
  std::vector<std::string> cols{"mode", "omega0_mev", "delta_mev", "temperature_k"};
  cols.insert(cols.end(), outputs.begin(), outputs.end());
  cols.push_back("status");
  write_row(os, cols);
}

inline void write_sweep_rows(std::ostream& os, const std::vector<RunRecord>& records,
                             const std::vector<std::string>& outputs) {
  for (const auto& r : records) {
    std::vector<std::string> row{r.spec.mode == GateMode::kDynamic ? "dynamic" : "adiabatic",
                                 format_number(r.spec.pulse.omega0), format_number(r.spec.pulse.delta),
                                 format_number(r.spec.temperature)};
    for (const auto& name : outputs) {
      const auto v = find_metric(r.metrics, name);
      row.push_back(v ? format_number(*v) : "");
    }
    row.push_back(r.error.empty() ? "ok" : csv_field("error: " + r.error));
    write_row(os, row);
  }
}

/// J(omega) and N(omega, T) on a grid; cutoffs echoed in the header.
inline void write_spectral_report(std::ostream& os, const MaterialParams& material, const std::vector<double>& grid,
                                  double temperature, const nlohmann::ordered_json& config) {
  const SpectralModel m = build_spectral_model(material);
  write_provenance(os, "spectral", config,
                   {"d_e_nm: " + format_number(m.d_e), "d_h_nm: " + format_number(m.d_h),
                    "w_e_mev: " + format_number(m.w_e), "w_eh_mev: " + format_number(m.w_eh),
                    "w_h_mev: " + format_number(m.w_h),
                    "prefactor_per_ps_per_mev3: " + format_number(m.prefactor),
                    "temperature_k: " + format_number(temperature)});
  write_row(os, {"omega_mev", "j_per_ps", "n_occupation"});
  for (double w : grid) {
    const double n = w > 0.0 ? bose_occupation(w, temperature)
                              : (temperature > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    write_row(os, {format_number(w), format_number(spectral_density(m, w)), format_number(n)});
  }
}

inline nlohmann::ordered_json metrics_json(const RunRecord& rec, const nlohmann::ordered_json& config) {
  nlohmann::ordered_json j;
  j["config"] = config;
  nlohmann::ordered_json m;
  for (const auto& [k, v] : rec.metrics) m[k] = v;
  j["metrics"] = m;
  j["wall_ms"] = rec.wall_ms;
  if (!rec.error.empty()) j["error"] = rec.error;
  return j;
}

}  // namespace qdgate
