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

// qdgate command-line driver.
//
//   qdgate gate <config> [--out metrics.csv] [--json summary.json] [--trajectory traj.csv]
//   qdgate sweep <config> [--threads N] [--out table.csv]
//   qdgate purity <config> [--out traj.csv]
//   qdgate spectral <config> [--out spectral.csv]
//   qdgate preset <fig4|fig5|fig6-left|fig6-right> [--out dir] [--threads N]
//
// Exit codes: 0 success, 1 configuration error, 2 solver failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdgate/config.hpp"
#include "qdgate/experiment.hpp"
#include "qdgate/output.hpp"
#include "qdgate/presets.hpp"

namespace {

using namespace qdgate;

constexpr int kExitConfig = 1;
constexpr int kExitSolver = 2;

// Resolved configuration of the current command, echoed on solver failure.
std::string g_resolved_config;

ConfigBundle load(const std::string& path) {
  ConfigBundle cfg = parse_config(path);
  g_resolved_config = to_json(cfg).dump();
  return cfg;
}

/// Writes to a file when a path is given, else to stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw ConfigError("cannot open output file '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_records(std::ostream& os, std::string_view command, const std::vector<SweepSpec>& series,
                   const std::vector<std::vector<RunRecord>>& results) {
  std::vector<std::string> extra;
  for (std::size_t i = 0; i < series.size(); ++i)
    extra.push_back("series[" + std::to_string(i) + "]: " +
                    to_json(ConfigBundle{series[i].fixed, series[i], {}}).dump());
  os << "# qdgate " << command << "\r\n";
  for (const auto& line : extra) os << "# " << line << "\r\n";
  write_sweep_header(os, series.front().outputs);
  for (const auto& r : results) write_sweep_rows(os, r, series.front().outputs);
}

int cmd_gate(const std::string& config, const std::string& out, const std::string& json_out,
             const std::string& traj_out) {
  const ConfigBundle cfg = load(config);
  const auto echo = to_json(cfg);
  const RunRecord rec = run_gate(cfg.gate, !traj_out.empty());

  Sink sink(out);
  std::ostream& os = sink.stream();
  write_provenance(os, "gate", echo, {"wall_ms: " + format_number(rec.wall_ms)});
  std::vector<std::string> names, values;
  for (const auto& [k, v] : rec.metrics) {
    names.push_back(k);
    values.push_back(format_number(v));
  }
  write_row(os, names);
  write_row(os, values);

  if (!json_out.empty()) {
    std::ofstream js(json_out);
    if (!js) throw ConfigError("cannot open output file '" + json_out + "'");
    js << metrics_json(rec, echo).dump(2) << "\n";
  }
  if (!traj_out.empty()) {
    std::ofstream ts(traj_out, std::ios::binary);
    if (!ts) throw ConfigError("cannot open output file '" + traj_out + "'");
    write_trajectory_csv(ts, rec, echo);
  }
  return 0;
}

int cmd_sweep(const std::string& config, const std::string& out, unsigned threads) {
  const ConfigBundle cfg = load(config);
  if (!cfg.sweep) throw ConfigError("config: sweep command needs a 'sweep' block");
  const auto records = sweep(*cfg.sweep, threads);
  Sink sink(out);
  write_provenance(sink.stream(), "sweep", to_json(cfg));
  write_sweep_header(sink.stream(), cfg.sweep->outputs);
  write_sweep_rows(sink.stream(), records, cfg.sweep->outputs);
  return 0;
}

int cmd_purity(const std::string& config, const std::string& out) {
  const ConfigBundle cfg = load(config);
  const RunRecord rec = run_gate(cfg.gate, true);
  Sink sink(out);
  write_trajectory_csv(sink.stream(), rec, to_json(cfg));
  return 0;
}

int cmd_spectral(const std::string& config, const std::string& out) {
  const ConfigBundle cfg = load(config);
  const auto& sg = cfg.spectral_grid;
  Sink sink(out);
  write_spectral_report(sink.stream(), cfg.gate.material, make_grid(sg.min_mev, sg.max_mev, sg.count, GridSpacing::kLinear),
                        cfg.gate.temperature, to_json(cfg));
  return 0;
}

int cmd_preset(const std::string& name, const std::string& dir, unsigned threads) {
  std::filesystem::create_directories(dir);
  auto open = [&](const std::string& file) {
    std::ofstream os(std::filesystem::path(dir) / file, std::ios::binary);
    if (!os) throw ConfigError("cannot open output file '" + file + "' in '" + dir + "'");
    return os;
  };
  auto run_series = [&](const std::vector<SweepSpec>& series, const std::string& file) {
    std::vector<std::vector<RunRecord>> results;
    for (const auto& s : series) results.push_back(sweep(s, threads));
    auto os = open(file);
    write_records(os, "preset " + name, series, results);
    std::cerr << "wrote " << (std::filesystem::path(dir) / file).string() << "\n";
  };

  if (name == "fig4") {
    run_series(presets::expected_decays(), "fig4.csv");
  } else if (name == "fig6-left") {
    run_series(presets::dynamic_fidelity(), "fig6-left.csv");
  } else if (name == "fig6-right") {
    run_series(presets::adiabatic_fidelity(), "fig6-right.csv");
  } else if (name == "fig5") {
    for (const GateSpec& g : presets::purity_traces()) {
      const RunRecord rec = run_gate(g, true);
      const std::string file = g.mode == GateMode::kDynamic
                                   ? "fig5-dynamic-omega" + format_number(g.pulse.omega0) + ".csv"
                                   : "fig5-adiabatic-delta" + format_number(g.pulse.delta) + ".csv";
      auto os = open(file);
      write_trajectory_csv(os, rec, to_json(g));
      std::cerr << "wrote " << (std::filesystem::path(dir) / file).string() << "\n";
    }
  } else {
    throw ConfigError("unknown preset '" + name + "' (expected fig4, fig5, fig6-left or fig6-right)");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qdgate: optical phase gates on quantum-dot spins"};
  app.require_subcommand(1);

  std::string config, out, json_out, traj_out, preset_name, out_dir = ".";
  unsigned threads = 1;

  auto* gate = app.add_subcommand("gate", "run one gate and print its metrics");
  gate->add_option("config", config, "JSON configuration")->required();
  gate->add_option("--out", out, "metrics CSV (default stdout)");
  gate->add_option("--json", json_out, "JSON metrics summary");
  gate->add_option("--trajectory", traj_out, "trajectory CSV");

  auto* sw = app.add_subcommand("sweep", "parameter sweep");
  sw->add_option("config", config, "JSON configuration with a 'sweep' block")->required();
  sw->add_option("--out", out, "table CSV (default stdout)");
  sw->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* pur = app.add_subcommand("purity", "trajectory CSV with purity and populations");
  pur->add_option("config", config, "JSON configuration")->required();
  pur->add_option("--out", out, "trajectory CSV (default stdout)");

  auto* spec = app.add_subcommand("spectral", "phonon spectral density report");
  spec->add_option("config", config, "JSON configuration")->required();
  spec->add_option("--out", out, "CSV (default stdout)");

  auto* pre = app.add_subcommand("preset", "reproduce a canned experiment");
  pre->add_option("name", preset_name, "fig4 | fig5 | fig6-left | fig6-right")->required();
  pre->add_option("--out", out_dir, "output directory");
  pre->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*gate) return cmd_gate(config, out, json_out, traj_out);
    if (*sw) return cmd_sweep(config, out, threads);
    if (*pur) return cmd_purity(config, out);
    if (*spec) return cmd_spectral(config, out);
    if (*pre) return cmd_preset(preset_name, out_dir, threads);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const SolverError& e) {
    std::cerr << "solver failure at t = " << e.time_ps() << " ps: " << e.what() << "\n";
    if (!config.empty()) std::cerr << "config file: " << config << "\n";
    if (!g_resolved_config.empty()) std::cerr << "resolved config: " << g_resolved_config << "\n";
    return kExitSolver;
  } catch (const Error& e) {
    std::cerr << "solver failure: " << e.what() << "\n";
    return kExitSolver;
  }
  return 0;
}
