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

#ifndef NUQSIM_EXPERIMENT_HPP
#define NUQSIM_EXPERIMENT_HPP

// Experiment runner: sweeps a time grid for one of the three experiments
// (vacuum oscillation, flavour inversion, concurrence), in exact,
// finite-shot, or noisy mode, and renders plot-ready CSV.
//
// Configuration is a flat key = value text file plus programmatic
// overrides; see parse_config_file for the key list. Runs are
// deterministic: a fixed config (including seed) byte-reproduces the CSV.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nuqsim/circuits.hpp"
#include "nuqsim/neutrino.hpp"
#include "nuqsim/qsim.hpp"
#include "nuqsim/rng.hpp"

namespace nuqsim {

enum class ExperimentKind { kVacuum, kInvert, kConcurrence };
enum class RunMode { kExact, kShots, kNoisy };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::kInvert;
  NeutrinoParams params;
  double t_min = 0.0;  // vacuum: baseline length in km; otherwise time in 1/eta
  double t_max = 25.0;
  int points = 201;
  RunMode mode = RunMode::kExact;
  std::uint64_t shots = 4096;
  int trotter_steps = 0;  // 0 selects default_trotter_steps(n)
  NoiseModel noise;       // applied in noisy mode only
  std::uint64_t seed = 12345;
  bool hardware_swaps = false;
  std::string out_path;

  int effective_steps() const {
    return trotter_steps > 0 ? trotter_steps : default_trotter_steps(params.n);
  }

  void validate() const {
    if (!(t_min <= t_max)) throw ConfigError("config: t_min must be <= t_max");
    if (points < 1) throw ConfigError("config: points must be >= 1");
    if (trotter_steps < 0) throw ConfigError("config: steps must be >= 0");
    if (mode != RunMode::kExact && shots < 1)
      throw ConfigError("config: shots must be >= 1");
    try {
      noise.validate();
      if (experiment == ExperimentKind::kVacuum) {
        if (!std::isfinite(params.theta_nu))
          throw std::invalid_argument("theta_nu must be finite");
        if (!(params.delta_m2 > 0.0)) throw std::invalid_argument("dm2 must be positive");
        if (!(params.energy > 0.0)) throw std::invalid_argument("energy must be positive");
      } else {
        params.validate();
        if (params.n < 2)
          throw std::invalid_argument("evolution experiments need n >= 2");
        inversion_target(params);
        if (experiment == ExperimentKind::kConcurrence && params.n != 2)
          throw std::invalid_argument("concurrence experiment needs n = 2");
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
  }
};

// Per-experiment defaults: the vacuum experiment uses the one-qubit
// appendix parameters (mixing angle 0.295, two oscillation periods in
// baseline length); the evolution experiments use the two-neutrino table
// (mixing angle 0.195, coupling angle pi/6) over roughly two envelope
// periods.
inline ExperimentConfig default_config(ExperimentKind kind) {
  ExperimentConfig cfg;
  cfg.experiment = kind;
  switch (kind) {
    case ExperimentKind::kVacuum:
      cfg.params.theta_nu = 0.295;
      cfg.t_max = 125.0;
      cfg.out_path = "vacuum.csv";
      break;
    case ExperimentKind::kInvert:
      cfg.out_path = "invert.csv";
      break;
    case ExperimentKind::kConcurrence:
      cfg.out_path = "concurrence.csv";
      break;
  }
  return cfg;
}

struct CsvReport {
  std::string header;
  std::vector<std::vector<double>> rows;
};

namespace detail {

inline std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::string(buf);
}

// Derives the sampling seed of one grid point so that grid points use
// independent random streams.
inline std::uint64_t point_seed(std::uint64_t seed, int point_index) {
  return derive_stream(seed, 0x706f696e74ULL + static_cast<std::uint64_t>(point_index));
}

inline double binomial_stderr(double p, std::uint64_t shots) {
  const double clamped = std::min(std::max(p, 0.0), 1.0);
  return std::sqrt(clamped * (1.0 - clamped) / static_cast<double>(shots));
}

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

// Probability of one target bitstring from a circuit run in the given mode.
inline Estimate estimate_probability(const Circuit& circuit, const std::string& target,
                                     const ExperimentConfig& cfg, int point_index) {
  if (cfg.mode == RunMode::kExact) {
    const StateVector st = run_statevector(circuit);
    return {probability_of(st, target), 0.0};
  }
  Counts counts;
  if (cfg.mode == RunMode::kShots) {
    const StateVector st = run_statevector(circuit);
    counts = sample_counts(st, cfg.shots, point_seed(cfg.seed, point_index));
  } else {
    counts = run_noisy(circuit, init_zero_state(circuit.num_qubits), cfg.shots, cfg.noise,
                       point_seed(cfg.seed, point_index));
  }
  const double p = counts.probability_of(target);
  return {p, binomial_stderr(p, cfg.shots)};
}

// Concurrence estimate from the swap-test circuit. The standard error is
// the binomial error of the ancilla survival probability pushed through
// the estimator as a symmetric interval (equivalent to the delta method
// away from the clamp, finite at the clamp).
inline Estimate estimate_concurrence(const Circuit& circuit, const ExperimentConfig& cfg,
                                     int point_index) {
  if (cfg.mode == RunMode::kExact) {
    const StateVector st = run_statevector(circuit);
    return {concurrence_from_survival(marginal_probability(st, 0, 0)), 0.0};
  }
  Counts counts;
  if (cfg.mode == RunMode::kShots) {
    const StateVector st = run_statevector(circuit);
    counts = sample_counts(st, cfg.shots, point_seed(cfg.seed, point_index));
  } else {
    counts = run_noisy(circuit, init_zero_state(circuit.num_qubits), cfg.shots, cfg.noise,
                       point_seed(cfg.seed, point_index));
  }
  const Counts ancilla = marginal_counts(counts, {0});
  const double p0 = ancilla.probability_of("0");
  const double sigma = binomial_stderr(p0, cfg.shots);
  auto est = [](double p) { return std::sqrt(std::max(2.0 * p - 1.0, 0.0)); };
  const double c = concurrence_from_counts(ancilla);
  return {c, (est(p0 + sigma) - est(p0 - sigma)) / 2.0};
}

}  // namespace detail

inline CsvReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  CsvReport report;
  std::vector<double> grid(static_cast<std::size_t>(cfg.points));
  for (int i = 0; i < cfg.points; ++i)
    grid[static_cast<std::size_t>(i)] =
        cfg.points == 1 ? cfg.t_min
                        : cfg.t_min + (cfg.t_max - cfg.t_min) * i / (cfg.points - 1);

  switch (cfg.experiment) {
    case ExperimentKind::kVacuum: {
      report.header = "t,p_surv_theory,p_dis_theory,p_dis_est,stderr";
      for (int i = 0; i < cfg.points; ++i) {
        const double length_km = grid[static_cast<std::size_t>(i)];
        const double p_dis = vacuum_disappearance(cfg.params.theta_nu, cfg.params.delta_m2,
                                                  length_km, cfg.params.energy);
        const double phase =
            2.0 * 1.27 * cfg.params.delta_m2 * length_km / cfg.params.energy;
        const Circuit circuit = vacuum_circuit(cfg.params.theta_nu, phase);
        const detail::Estimate est = detail::estimate_probability(circuit, "1", cfg, i);
        report.rows.push_back({length_km, 1.0 - p_dis, p_dis, est.value, est.std_error});
      }
      break;
    }
    case ExperimentKind::kInvert: {
      report.header = "t,p_inv_theory,p_inv_est,stderr";
      const ExactEvolver oracle(cfg.params);
      const std::string target = inversion_target(cfg.params);
      for (int i = 0; i < cfg.points; ++i) {
        const double t = grid[static_cast<std::size_t>(i)];
        const Circuit circuit =
            evolution_circuit(cfg.params, t, cfg.effective_steps(), cfg.hardware_swaps);
        const detail::Estimate est = detail::estimate_probability(circuit, target, cfg, i);
        report.rows.push_back({t, oracle.inversion_probability(t), est.value, est.std_error});
      }
      break;
    }
    case ExperimentKind::kConcurrence: {
      report.header = "t,c_theory,c_est,stderr";
      const ExactEvolver oracle(cfg.params);
      for (int i = 0; i < cfg.points; ++i) {
        const double t = grid[static_cast<std::size_t>(i)];
        const Circuit circuit = concurrence_circuit(cfg.params, t, cfg.effective_steps());
        const detail::Estimate est = detail::estimate_concurrence(circuit, cfg, i);
        report.rows.push_back(
            {t, concurrence_exact(oracle.state_at(t)), est.value, est.std_error});
      }
      break;
    }
  }
  return report;
}

// Renders the report with LF line endings and %.12g number formatting,
// which round-trips doubles through text deterministically.
inline std::string to_csv(const CsvReport& report) {
  std::string out = report.header;
  out.push_back('\n');
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out.push_back(',');
      out += detail::format_value(row[i]);
    }
    out.push_back('\n');
  }
  return out;
}

inline void write_csv_file(const CsvReport& report, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << to_csv(report);
  if (!f) throw std::runtime_error("failed writing output file: " + path);
}

// ---------------------------------------------------------------------------
// Flat key = value configuration.

namespace detail {

inline double parse_real(const std::string& value, const std::string& key) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' needs a real number, got '" + value + "'");
  }
  if (pos != value.size() || !std::isfinite(v))
    throw ConfigError("config: key '" + key + "' needs a real number, got '" + value + "'");
  return v;
}

inline long long parse_integer(const std::string& value, const std::string& key) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' needs an integer, got '" + value + "'");
  }
  if (pos != value.size())
    throw ConfigError("config: key '" + key + "' needs an integer, got '" + value + "'");
  return v;
}

inline bool parse_bool(const std::string& value, const std::string& key) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("config: key '" + key + "' needs true/false, got '" + value + "'");
}

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace detail

inline RunMode parse_run_mode(const std::string& name) {
  if (name == "exact") return RunMode::kExact;
  if (name == "shots" || name == "statevector-shots") return RunMode::kShots;
  if (name == "noisy") return RunMode::kNoisy;
  throw ConfigError("config: unknown mode '" + name + "' (exact, shots, noisy)");
}

inline ExperimentKind parse_experiment_kind(const std::string& name) {
  if (name == "vacuum") return ExperimentKind::kVacuum;
  if (name == "invert") return ExperimentKind::kInvert;
  if (name == "concurrence") return ExperimentKind::kConcurrence;
  throw ConfigError("config: unknown experiment '" + name + "'");
}

// "p:q:angle" with 1-based neutrino indices.
inline void apply_pair_angle(NeutrinoParams& params, const std::string& value) {
  const auto c1 = value.find(':');
  const auto c2 = value.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw ConfigError("config: pair_angle needs p:q:angle, got '" + value + "'");
  const long long p = detail::parse_integer(value.substr(0, c1), "pair_angle");
  const long long q = detail::parse_integer(value.substr(c1 + 1, c2 - c1 - 1), "pair_angle");
  const double angle = detail::parse_real(value.substr(c2 + 1), "pair_angle");
  if (p < 1 || q <= p)
    throw ConfigError("config: pair_angle indices must satisfy 1 <= p < q, got '" + value + "'");
  params.coupling_angles[{static_cast<int>(p), static_cast<int>(q)}] = angle;
}

// "p1,p2,pr": depolarizing probabilities after 1-qubit and wider gates,
// then the readout flip probability.
inline NoiseModel parse_noise(const std::string& value) {
  const auto c1 = value.find(',');
  const auto c2 = value.find(',', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw ConfigError("config: noise needs p1,p2,pr, got '" + value + "'");
  NoiseModel noise;
  noise.p_depol_1q = detail::parse_real(value.substr(0, c1), "noise");
  noise.p_depol_2q = detail::parse_real(value.substr(c1 + 1, c2 - c1 - 1), "noise");
  noise.p_readout_flip = detail::parse_real(value.substr(c2 + 1), "noise");
  try {
    noise.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return noise;
}

// Applies one key = value setting. Setting n refits initial_flavours to
// the conventional n-1 electron + 1 muon product state unless flavours
// was itself set explicitly.
inline void apply_key_value(ExperimentConfig& cfg, const std::string& key,
                            const std::string& value) {
  if (key == "experiment") {
    cfg.experiment = parse_experiment_kind(value);
  } else if (key == "n") {
    const long long n = detail::parse_integer(value, key);
    if (n < 1 || n > 10) throw ConfigError("config: n must be in [1, 10]");
    cfg.params.n = static_cast<int>(n);
    if (static_cast<int>(cfg.params.initial_flavours.size()) != cfg.params.n)
      cfg.params.initial_flavours = std::string(static_cast<std::size_t>(n - 1), 'e') + "m";
  } else if (key == "theta_nu") {
    cfg.params.theta_nu = detail::parse_real(value, key);
  } else if (key == "pair_angle") {
    apply_pair_angle(cfg.params, value);
  } else if (key == "dm2") {
    cfg.params.delta_m2 = detail::parse_real(value, key);
  } else if (key == "energy") {
    cfg.params.energy = detail::parse_real(value, key);
  } else if (key == "v_cc") {
    cfg.params.v_cc = detail::parse_real(value, key);
  } else if (key == "flavours") {
    cfg.params.initial_flavours = value;
  } else if (key == "t_min") {
    cfg.t_min = detail::parse_real(value, key);
  } else if (key == "t_max") {
    cfg.t_max = detail::parse_real(value, key);
  } else if (key == "points") {
    cfg.points = static_cast<int>(detail::parse_integer(value, key));
  } else if (key == "mode") {
    cfg.mode = parse_run_mode(value);
  } else if (key == "shots") {
    const long long s = detail::parse_integer(value, key);
    if (s < 1) throw ConfigError("config: shots must be >= 1");
    cfg.shots = static_cast<std::uint64_t>(s);
  } else if (key == "steps") {
    cfg.trotter_steps = static_cast<int>(detail::parse_integer(value, key));
  } else if (key == "seed") {
    cfg.seed = static_cast<std::uint64_t>(detail::parse_integer(value, key));
  } else if (key == "noise") {
    cfg.noise = parse_noise(value);
  } else if (key == "hardware_swaps") {
    cfg.hardware_swaps = detail::parse_bool(value, key);
  } else if (key == "out") {
    cfg.out_path = value;
  } else {
    throw ConfigError("config: unknown key '" + key + "'");
  }
}

// Flat key = value file: one setting per line, '#' starts a comment,
// blank lines ignored, repeated pair_angle keys accumulate. Errors cite
// the offending line number.
inline void apply_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config: cannot open file: " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = detail::trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: " + path + ":" + std::to_string(line_no) +
                        ": expected key = value");
    const std::string key = detail::trim(stripped.substr(0, eq));
    const std::string value = detail::trim(stripped.substr(eq + 1));
    try {
      apply_key_value(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(e.what()) + " (" + path + ":" +
                        std::to_string(line_no) + ")");
    }
  }
}

}  // namespace nuqsim

#endif  // NUQSIM_EXPERIMENT_HPP
