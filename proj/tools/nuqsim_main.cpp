// Copyright 2026 The nuqsim Authors
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

// Command-line experiment runner. Subcommands select the experiment;
// settings come from built-in defaults, then an optional --config file,
// then explicit flags (flags win). Writes one CSV per run.
//
//   nuqsim vacuum --points 201 --out vacuum.csv
//   nuqsim invert --mode shots --shots 4096 --seed 7
//   nuqsim concurrence --config sweep.cfg --t-max 25
//
// Exit code 0 on success, 2 on configuration errors.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nuqsim/nuqsim.hpp"

namespace {

struct RawFlags {
  std::string config_path;
  int n = 0;
  double theta_nu = 0.0;
  std::vector<std::string> pair_angles;
  double dm2 = 0.0;
  double energy = 0.0;
  double t_max = 0.0;
  int points = 0;
  std::string mode;
  long long shots = 0;
  int steps = 0;
  long long seed = 0;
  std::string noise;
  bool hardware_swaps = false;
  std::string out_path;
};

void add_common_options(CLI::App* cmd, RawFlags& flags) {
  cmd->add_option("--config", flags.config_path, "key = value settings file");
  cmd->add_option("--n", flags.n, "number of neutrinos");
  cmd->add_option("--theta-nu", flags.theta_nu, "vacuum mixing angle [rad]");
  cmd->add_option("--pair-angle", flags.pair_angles,
                  "interaction angle p:q:radians (repeatable)");
  cmd->add_option("--dm2", flags.dm2, "mass-squared difference [eV^2]");
  cmd->add_option("--energy", flags.energy, "neutrino energy [GeV]");
  cmd->add_option("--t-max", flags.t_max, "grid end (time [1/eta]; km for vacuum)");
  cmd->add_option("--points", flags.points, "number of grid points");
  cmd->add_option("--mode", flags.mode, "exact | shots | noisy");
  cmd->add_option("--shots", flags.shots, "shots per grid point");
  cmd->add_option("--steps", flags.steps, "Trotter steps (0 = per-size default)");
  cmd->add_option("--seed", flags.seed, "random seed");
  cmd->add_option("--noise", flags.noise, "depolarizing/readout probabilities p1,p2,pr");
  cmd->add_flag("--hardware-swaps", flags.hardware_swaps,
                "route non-adjacent pairs through SWAP chains");
  cmd->add_option("--out", flags.out_path, "output CSV path");
}

// Flags override whatever the defaults and config file produced. Values
// route through the same key parser as the config file so both paths
// validate identically.
void apply_flag_overrides(nuqsim::ExperimentConfig& cfg, const CLI::App& cmd,
                          const RawFlags& flags) {
  using nuqsim::apply_key_value;
  if (cmd.count("--n") > 0) apply_key_value(cfg, "n", std::to_string(flags.n));
  if (cmd.count("--theta-nu") > 0)
    apply_key_value(cfg, "theta_nu", nuqsim::detail::format_value(flags.theta_nu));
  for (const std::string& pair : flags.pair_angles)
    apply_key_value(cfg, "pair_angle", pair);
  if (cmd.count("--dm2") > 0)
    apply_key_value(cfg, "dm2", nuqsim::detail::format_value(flags.dm2));
  if (cmd.count("--energy") > 0)
    apply_key_value(cfg, "energy", nuqsim::detail::format_value(flags.energy));
  if (cmd.count("--t-max") > 0)
    apply_key_value(cfg, "t_max", nuqsim::detail::format_value(flags.t_max));
  if (cmd.count("--points") > 0) apply_key_value(cfg, "points", std::to_string(flags.points));
  if (cmd.count("--mode") > 0) apply_key_value(cfg, "mode", flags.mode);
  if (cmd.count("--shots") > 0) apply_key_value(cfg, "shots", std::to_string(flags.shots));
  if (cmd.count("--steps") > 0) apply_key_value(cfg, "steps", std::to_string(flags.steps));
  if (cmd.count("--seed") > 0) apply_key_value(cfg, "seed", std::to_string(flags.seed));
  if (cmd.count("--noise") > 0) apply_key_value(cfg, "noise", flags.noise);
  if (cmd.count("--hardware-swaps") > 0)
    apply_key_value(cfg, "hardware_swaps", flags.hardware_swaps ? "true" : "false");
  if (cmd.count("--out") > 0) apply_key_value(cfg, "out", flags.out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"collective neutrino oscillation circuit experiments"};
  app.require_subcommand(1);

  RawFlags flags;
  CLI::App* vacuum = app.add_subcommand("vacuum", "one-qubit vacuum oscillation sweep");
  CLI::App* invert = app.add_subcommand("invert", "flavour-inversion probability sweep");
  CLI::App* concurrence =
      app.add_subcommand("concurrence", "swap-test pairwise concurrence sweep");
  add_common_options(vacuum, flags);
  add_common_options(invert, flags);
  add_common_options(concurrence, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* cmd = vacuum;
  nuqsim::ExperimentKind kind = nuqsim::ExperimentKind::kVacuum;
  if (invert->parsed()) {
    cmd = invert;
    kind = nuqsim::ExperimentKind::kInvert;
  } else if (concurrence->parsed()) {
    cmd = concurrence;
    kind = nuqsim::ExperimentKind::kConcurrence;
  }

  try {
    nuqsim::ExperimentConfig cfg = nuqsim::default_config(kind);
    if (cmd->count("--config") > 0) nuqsim::apply_config_file(cfg, flags.config_path);
    // The subcommand decides the experiment even if the config file names one.
    cfg.experiment = kind;
    apply_flag_overrides(cfg, *cmd, flags);
    cfg.validate();

    const nuqsim::CsvReport report = nuqsim::run_experiment(cfg);
    nuqsim::write_csv_file(report, cfg.out_path);
    std::printf("wrote %s (%zu rows)\n", cfg.out_path.c_str(), report.rows.size());
    return 0;
  } catch (const nuqsim::ConfigError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
