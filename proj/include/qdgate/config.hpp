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

// Strict JSON configuration. Keys are snake_case with unit suffixes; unknown
// keys are rejected. to_json() writes the fully resolved configuration and
// parses back to an identical ConfigBundle.
//
//   {
//     "mode": "adiabatic" | "dynamic",
//     "omega0_mev": 1.0, "delta_mev": 10.0,
//     "gamma0_per_ps": 0.01, "temperature_k": 0.0, "target_phase_rad": 3.14159...,
//     "tol_rel": 1e-9, "tol_abs": 1e-12, "samples": 2000,
//     "channels": ["radiative", "phonon"],
//     "spectral_scale": 1.0, "piezo_prefactor_per_ps_per_mev3": 0.0,
//     "material": { "d_e_ev": 14.6, ... },
//     "sweep": { "variable": "delta", "values": [...] | "grid": {...}, "outputs": [...] },
//     "spectral_grid": { "min_mev": 0.0, "max_mev": 20.0, "count": 201 }
//   }

#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qdgate/environment.hpp"
#include "qdgate/errors.hpp"
#include "qdgate/experiment.hpp"
#include "qdgate/pulse.hpp"

namespace qdgate {

struct SpectralGridSpec {
  double min_mev = 0.0;
  double max_mev = 20.0;
  int count = 201;

  friend bool operator==(const SpectralGridSpec&, const SpectralGridSpec&) = default;
};

struct ConfigBundle {
  GateSpec gate;
  std::optional<SweepSpec> sweep;  // sweep->fixed mirrors gate
  SpectralGridSpec spectral_grid;

  friend bool operator==(const ConfigBundle&, const ConfigBundle&) = default;
};

namespace detail {

using Json = nlohmann::ordered_json;

inline void check_keys(const Json& obj, const std::string& path, const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ConfigError("config: '" + path + "' must be an object");
  for (const auto& item : obj.items())
    if (!allowed.count(item.key())) {
      const std::string where = path.empty() ? item.key() : path + "." + item.key();
      throw ConfigError("config: unknown key '" + where + "'");
    }
}

inline double get_number(const Json& obj, const std::string& key, const std::string& path, double fallback,
                         const char* units) {
  if (!obj.contains(key)) return fallback;
  const Json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError("config: '" + path + key + "' expects a number in " + units);
  return v.get<double>();
}

inline int get_int(const Json& obj, const std::string& key, const std::string& path, int fallback) {
  if (!obj.contains(key)) return fallback;
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError("config: '" + path + key + "' expects an integer");
  return v.get<int>();
}

inline std::string get_string(const Json& obj, const std::string& key, const std::string& path,
                              const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  const Json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError("config: '" + path + key + "' expects a string");
  return v.get<std::string>();
}

inline std::vector<std::string> get_strings(const Json& obj, const std::string& key, const std::string& path,
                                            std::vector<std::string> fallback) {
  if (!obj.contains(key)) return fallback;
  const Json& v = obj.at(key);
  if (!v.is_array()) throw ConfigError("config: '" + path + key + "' expects an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw ConfigError("config: '" + path + key + "' expects an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline const char* to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::kDelta:
      return "delta";
    case SweepVariable::kOmega:
      return "omega";
    case SweepVariable::kTemperature:
      return "temperature";
  }
  return "?";
}

}  // namespace detail

inline ConfigBundle parse_config_json(const nlohmann::ordered_json& root) {
  using detail::Json;
  detail::check_keys(root, "",
                     {"mode", "omega0_mev", "delta_mev", "gamma0_per_ps", "temperature_k", "target_phase_rad",
                      "tol_rel", "tol_abs", "samples", "channels", "spectral_scale",
                      "piezo_prefactor_per_ps_per_mev3", "material", "sweep", "spectral_grid"});
  ConfigBundle cfg;
  GateSpec& g = cfg.gate;

  const std::string mode = detail::get_string(root, "mode", "", "adiabatic");
  if (mode == "adiabatic") {
    g.mode = GateMode::kAdiabatic;
  } else if (mode == "dynamic") {
    g.mode = GateMode::kDynamic;
  } else {
    throw ConfigError("config: 'mode' must be \"adiabatic\" or \"dynamic\", got \"" + mode + "\"");
  }
  const bool dynamic = g.mode == GateMode::kDynamic;
  const double omega0 = detail::get_number(root, "omega0_mev", "", dynamic ? 0.1 : 1.0, "meV");
  const double delta = detail::get_number(root, "delta_mev", "", dynamic ? 0.0 : 10.0, "meV");
  g.gamma0 = detail::get_number(root, "gamma0_per_ps", "", 0.01, "1/ps");
  g.temperature = detail::get_number(root, "temperature_k", "", 0.0, "K");
  g.target_phase = detail::get_number(root, "target_phase_rad", "", units::kPi, "rad");
  g.solver.tol_rel = detail::get_number(root, "tol_rel", "", g.solver.tol_rel, "relative units");
  g.solver.tol_abs = detail::get_number(root, "tol_abs", "", g.solver.tol_abs, "absolute units");
  g.solver.samples = detail::get_int(root, "samples", "", g.solver.samples);
  g.spectral_scale = detail::get_number(root, "spectral_scale", "", 1.0, "dimensionless units");
  g.piezo_prefactor = detail::get_number(root, "piezo_prefactor_per_ps_per_mev3", "", 0.0, "1/ps/meV^3");

  const auto channels = detail::get_strings(root, "channels", "", {"radiative", "phonon"});
  g.channels = {false, false, false};
  for (const auto& c : channels) {
    if (c == "radiative") {
      g.channels.radiative = true;
    } else if (c == "phonon") {
      g.channels.phonon = true;
    } else if (c == "piezo") {
      g.channels.piezo = true;
    } else {
      throw ConfigError("config: unknown channel '" + c + "' (expected radiative, phonon or piezo)");
    }
  }

  if (root.contains("material")) {
    const Json& m = root.at("material");
    detail::check_keys(m, "material",
                       {"d_e_ev", "d_h_ev", "mass_density_g_per_cm3", "sound_speed_cm_per_s", "m_e_eff_m0",
                        "m_h_eff_m0", "confinement_j_per_m2"});
    MaterialParams& p = g.material;
    p.d_e_coupling = detail::get_number(m, "d_e_ev", "material.", p.d_e_coupling, "eV");
    p.d_h_coupling = detail::get_number(m, "d_h_ev", "material.", p.d_h_coupling, "eV");
    p.mass_density = detail::get_number(m, "mass_density_g_per_cm3", "material.", p.mass_density, "g/cm^3");
    p.sound_speed = detail::get_number(m, "sound_speed_cm_per_s", "material.", p.sound_speed, "cm/s");
    p.m_e_eff = detail::get_number(m, "m_e_eff_m0", "material.", p.m_e_eff, "units of m0");
    p.m_h_eff = detail::get_number(m, "m_h_eff_m0", "material.", p.m_h_eff, "units of m0");
    p.confinement = detail::get_number(m, "confinement_j_per_m2", "material.", p.confinement, "J/m^2");
  }

  g.pulse = dynamic ? PulseSchedule::square(omega0, delta, omega0 > 0.0 ? dynamic_duration(omega0) : 0.0)
                    : PulseSchedule::gaussian(omega0, delta,
                                              omega0 > 0.0 && delta > 0.0 && g.target_phase > 0.0
                                                  ? tau_seed(omega0, delta, g.target_phase)
                                                  : 0.0);
  try {
    validate(g);
  } catch (const ConfigError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }

  if (root.contains("spectral_grid")) {
    const Json& s = root.at("spectral_grid");
    detail::check_keys(s, "spectral_grid", {"min_mev", "max_mev", "count"});
    auto& sg = cfg.spectral_grid;
    sg.min_mev = detail::get_number(s, "min_mev", "spectral_grid.", sg.min_mev, "meV");
    sg.max_mev = detail::get_number(s, "max_mev", "spectral_grid.", sg.max_mev, "meV");
    sg.count = detail::get_int(s, "count", "spectral_grid.", sg.count);
    if (!(sg.min_mev >= 0.0) || !(sg.max_mev > sg.min_mev) || sg.count < 2)
      throw ConfigError("config: spectral_grid needs 0 <= min_mev < max_mev (meV) and count >= 2");
  }

  if (root.contains("sweep")) {
    const Json& s = root.at("sweep");
    detail::check_keys(s, "sweep", {"variable", "values", "grid", "outputs"});
    SweepSpec sw;
    sw.fixed = g;
    const std::string var = detail::get_string(s, "variable", "sweep.", "delta");
    if (var == "delta") {
      sw.variable = SweepVariable::kDelta;
    } else if (var == "omega") {
      sw.variable = SweepVariable::kOmega;
    } else if (var == "temperature") {
      sw.variable = SweepVariable::kTemperature;
    } else {
      throw ConfigError("config: 'sweep.variable' must be delta, omega or temperature");
    }
    if (s.contains("values") == s.contains("grid"))
      throw ConfigError("config: 'sweep' needs exactly one of 'values' or 'grid'");
    if (s.contains("values")) {
      const Json& v = s.at("values");
      if (!v.is_array()) throw ConfigError("config: 'sweep.values' expects an array of numbers");
      for (const auto& e : v) {
        if (!e.is_number()) throw ConfigError("config: 'sweep.values' expects an array of numbers");
        sw.grid.push_back(e.get<double>());
      }
    } else {
      const Json& gr = s.at("grid");
      detail::check_keys(gr, "sweep.grid", {"min", "max", "count", "spacing"});
      const double lo = detail::get_number(gr, "min", "sweep.grid.", 0.0, "the swept variable's units");
      const double hi = detail::get_number(gr, "max", "sweep.grid.", 0.0, "the swept variable's units");
      const int count = detail::get_int(gr, "count", "sweep.grid.", 0);
      const std::string spacing = detail::get_string(gr, "spacing", "sweep.grid.", "linear");
      if (spacing != "linear" && spacing != "log")
        throw ConfigError("config: 'sweep.grid.spacing' must be linear or log");
      sw.grid = make_grid(lo, hi, count, spacing == "log" ? GridSpacing::kLog : GridSpacing::kLinear);
    }
    sw.outputs = detail::get_strings(s, "outputs", "sweep.", {"fidelity"});
    try {
      validate(sw);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
    cfg.sweep = std::move(sw);
  }
  return cfg;
}

inline ConfigBundle parse_config_text(const std::string& text) {
  nlohmann::ordered_json root;
  try {
    root = text.find_first_not_of(" \t\r\n") == std::string::npos ? nlohmann::ordered_json::object()
                                                                   : nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  return parse_config_json(root);
}

inline ConfigBundle parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

/// Fully resolved configuration; parse_config_json(to_json(c)) == c.
inline nlohmann::ordered_json to_json(const ConfigBundle& c) {
  const GateSpec& g = c.gate;
  nlohmann::ordered_json j;
  j["mode"] = g.mode == GateMode::kDynamic ? "dynamic" : "adiabatic";
  j["omega0_mev"] = g.pulse.omega0;
  j["delta_mev"] = g.pulse.delta;
  j["gamma0_per_ps"] = g.gamma0;
  j["temperature_k"] = g.temperature;
  j["target_phase_rad"] = g.target_phase;
  j["tol_rel"] = g.solver.tol_rel;
  j["tol_abs"] = g.solver.tol_abs;
  j["samples"] = g.solver.samples;
  auto channels = nlohmann::ordered_json::array();
  if (g.channels.radiative) channels.push_back("radiative");
  if (g.channels.phonon) channels.push_back("phonon");
  if (g.channels.piezo) channels.push_back("piezo");
  j["channels"] = channels;
  j["spectral_scale"] = g.spectral_scale;
  j["piezo_prefactor_per_ps_per_mev3"] = g.piezo_prefactor;
  j["material"] = {{"d_e_ev", g.material.d_e_coupling},
                   {"d_h_ev", g.material.d_h_coupling},
                   {"mass_density_g_per_cm3", g.material.mass_density},
                   {"sound_speed_cm_per_s", g.material.sound_speed},
                   {"m_e_eff_m0", g.material.m_e_eff},
                   {"m_h_eff_m0", g.material.m_h_eff},
                   {"confinement_j_per_m2", g.material.confinement}};
  if (c.sweep) {
    j["sweep"] = {{"variable", detail::to_string(c.sweep->variable)},
                  {"values", c.sweep->grid},
                  {"outputs", c.sweep->outputs}};
  }
  j["spectral_grid"] = {
      {"min_mev", c.spectral_grid.min_mev}, {"max_mev", c.spectral_grid.max_mev}, {"count", c.spectral_grid.count}};
  return j;
}

inline nlohmann::ordered_json to_json(const GateSpec& g) { return to_json(ConfigBundle{g, std::nullopt, {}}); }

}  // namespace qdgate
