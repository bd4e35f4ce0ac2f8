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

// End-to-end acceptance checks. Each check prints one PASS/FAIL line with
// the measured quantities; the exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "nuqsim/nuqsim.hpp"

namespace {

using namespace nuqsim;

constexpr double kEnvelopePeriod = 11.724583399882246;  // 2 pi / (4 J12)

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, ...) {
  va_list args;
  va_start(args, format);
  char buf[512];
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return std::string(buf);
}

NeutrinoParams three_body_params() {
  NeutrinoParams params;
  params.n = 3;
  params.coupling_angles = {{{1, 2}, 0.0},
                            {{1, 3}, std::numbers::pi / 6.0},
                            {{2, 3}, std::numbers::pi / 6.0}};
  params.initial_flavours = "eem";
  return params;
}

double circuit_inversion_probability(const NeutrinoParams& params, double t, int steps) {
  const Circuit c = evolution_circuit(params, t, steps);
  return probability_of(run_statevector(c), inversion_target(params));
}

double swap_test_concurrence_exact(const NeutrinoParams& params, double t) {
  const StateVector st = run_statevector(concurrence_circuit(params, t, 1));
  return concurrence_from_survival(marginal_probability(st, 0, 0));
}

// 1. The vacuum-oscillation sweep peaks at sin^2(2 theta), and a 4096-shot
//    estimate of the peak stays within combined binomial error of 0.3095.
Outcome check_vacuum_amplitude() {
  const double theta = 0.295;
  const double amplitude = std::pow(std::sin(2.0 * theta), 2);

  ExperimentConfig cfg = default_config(ExperimentKind::kVacuum);
  const double peak_km = 0.5 * std::numbers::pi * cfg.params.energy /
                         (1.27 * cfg.params.delta_m2);
  cfg.t_max = 4.0 * peak_km;  // two full oscillation periods, peaks on-grid
  cfg.points = 201;
  const CsvReport exact = run_experiment(cfg);
  double max_exact = 0.0;
  for (const auto& row : exact.rows) max_exact = std::max(max_exact, row[3]);

  cfg.mode = RunMode::kShots;
  cfg.shots = 4096;
  cfg.seed = 20260816;
  cfg.points = 21;
  const CsvReport sampled = run_experiment(cfg);
  double max_sampled = 0.0;
  for (const auto& row : sampled.rows) max_sampled = std::max(max_sampled, row[3]);

  const double exact_gap = std::abs(max_exact - amplitude);
  const double quoted_gap = std::abs(max_exact - 0.3095);
  const double sampled_gap = std::abs(max_sampled - 0.3095);
  const bool pass = exact_gap < 1e-6 && quoted_gap < 5e-5 && sampled_gap < 0.023;
  return {pass, fmt("peak=%.9f |peak-sin^2(2t)|=%.2e |peak-0.3095|=%.2e "
                    "shot peak=%.4f (gap %.4f, limit 0.023)",
                    max_exact, exact_gap, quoted_gap, max_sampled, sampled_gap)};
}

// 2. For two neutrinos the one-body and coupling terms commute, so the
//    single-step circuit reproduces the eigensolver evolution exactly.
Outcome check_two_body_exactness() {
  const NeutrinoParams params;
  NeutrinoParams uncoupled = params;
  uncoupled.coupling_angles[{1, 2}] = 0.0;

  const Mat h_full = hamiltonian_summed(params);
  const Mat h_one = hamiltonian_summed(uncoupled);
  const Mat h_two = h_full - h_one;
  const double comm_norm = frobenius_norm(h_one * h_two - h_two * h_one);

  const ExactEvolver oracle(params);
  double max_gap = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double t = 2.0 * kEnvelopePeriod * k / 199.0;
    const double gap =
        std::abs(circuit_inversion_probability(params, t, 1) - oracle.inversion_probability(t));
    max_gap = std::max(max_gap, gap);
  }
  const bool pass = comm_norm < 1e-12 && max_gap < 1e-9;
  return {pass, fmt("commutator norm=%.2e (limit 1e-12), max curve gap=%.2e "
                    "over 200 points (limit 1e-9)",
                    comm_norm, max_gap)};
}

// 3. The three-cnot interaction gate matches the exact two-spin propagator
//    on both the equal-coupling closed form and random couplings.
Outcome check_decomposition_fidelity() {
  Mat xx(4, 4), yy(4, 4), zz(4, 4);
  const Mat x = local_matrix(GateOp::x(0));
  Mat y(2, 2);
  y(0, 1) = cplx(0.0, -1.0);
  y(1, 0) = cplx(0.0, 1.0);
  Mat z(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  xx = kron(x, x);
  yy = kron(y, y);
  zz = kron(z, z);

  auto gate_error = [&](const XYZCoefficients& h) {
    const Circuit c = xyz_propagator_circuit(h, 1, 0);
    if (c.count(GateKind::kCnot) != 3) return 1.0;
    const Mat target = expm_hermitian(
        cplx(h.hx) * xx + cplx(h.hy) * yy + cplx(h.hz) * zz, 1.0);
    return distance_up_to_global_phase(circuit_unitary(c), target);
  };

  const double j = 1.0 - std::cos(std::numbers::pi / 6.0);
  double max_equal = 0.0;
  for (int k = 1; k <= 20; ++k) {
    const double h = j * 0.17 * k;
    max_equal = std::max(max_equal, gate_error({h, h, h}));
  }

  Xoshiro256 rng(314159);
  double max_random = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    auto draw = [&] {
      return -std::numbers::pi + 2.0 * std::numbers::pi * rng.uniform();
    };
    max_random = std::max(max_random, gate_error({draw(), draw(), draw()}));
  }
  const bool pass = max_equal < 1e-9 && max_random < 1e-9;
  return {pass, fmt("equal-coupling max distance=%.2e, random-coupling max "
                    "distance=%.2e (limit 1e-9, 3 cnots everywhere)",
                    max_equal, max_random)};
}

// 4. For three neutrinos the splitting error scales first order: halving
//    ratios near 2 as steps double 8 -> 16 -> 32 -> 64, below 1e-3 at 64.
Outcome check_trotter_convergence() {
  const NeutrinoParams params = three_body_params();
  const ExactEvolver oracle(params);
  std::vector<double> errors;
  for (const int steps : {8, 16, 32, 64}) {
    double max_err = 0.0;
    for (int k = 1; k <= 12; ++k) {
      const double t = k / 12.0;
      const double gap =
          std::abs(circuit_inversion_probability(params, t, steps) -
                   oracle.inversion_probability(t));
      max_err = std::max(max_err, gap);
    }
    errors.push_back(max_err);
  }
  bool ratios_ok = true;
  double ratios[3];
  for (int i = 0; i < 3; ++i) {
    ratios[i] = errors[i] / errors[i + 1];
    ratios_ok = ratios_ok && ratios[i] > 1.7 && ratios[i] < 2.3;
  }
  const bool pass = ratios_ok && errors.back() < 1e-3;
  return {pass, fmt("errors 8/16/32/64 steps = %.2e %.2e %.2e %.2e, halving "
                    "ratios = %.2f %.2f %.2f (limits [1.7,2.3], final < 1e-3)",
                    errors[0], errors[1], errors[2], errors[3], ratios[0],
                    ratios[1], ratios[2])};
}

// 5. The swap-test circuit reproduces the closed-form concurrence: exactly
//    at t = 0, to 1e-9 in exact mode, and within 0.05 at 4096 shots for
//    points with concurrence above 0.2 (the estimator variance diverges as
//    the concurrence approaches zero, so small values are excluded).
Outcome check_concurrence_pipeline() {
  const NeutrinoParams params;
  const ExactEvolver oracle(params);

  const double c0_circuit = swap_test_concurrence_exact(params, 0.0);
  const double c0_formula = concurrence_exact(oracle.state_at(0.0));

  double max_exact_gap = 0.0;
  double max_shot_gap = 0.0;
  int shot_points = 0;
  for (int k = 0; k < 25; ++k) {
    const double t = 2.0 * kEnvelopePeriod * k / 24.0;
    const double reference = concurrence_exact(oracle.state_at(t));
    const double via_circuit = swap_test_concurrence_exact(params, t);
    max_exact_gap = std::max(max_exact_gap, std::abs(via_circuit - reference));

    if (reference > 0.2) {
      const StateVector st = run_statevector(concurrence_circuit(params, t, 1));
      const Counts counts =
          sample_counts(st, 4096, derive_stream(411, static_cast<std::uint64_t>(k)));
      const double estimate = concurrence_from_counts(marginal_counts(counts, {0}));
      max_shot_gap = std::max(max_shot_gap, std::abs(estimate - reference));
      ++shot_points;
    }
  }
  const bool pass = c0_circuit == 0.0 && c0_formula == 0.0 &&
                    max_exact_gap < 1e-9 && max_shot_gap < 0.05;
  return {pass, fmt("C(0)=%g exactly, exact-mode max gap=%.2e (limit 1e-9), "
                    "4096-shot max gap=%.3f over %d points with C>0.2 (limit 0.05)",
                    c0_circuit, max_exact_gap, max_shot_gap, shot_points)};
}

// 6. Claimed concurrence/inversion correlation: concurrence below 1e-2 at
//    every local extremum of the inversion probability, and inversion
//    probability within 1e-2 of half its maximum at every local maximum of
//    the concurrence. The vacuum term moves the inversion extrema away
//    from the interaction envelope, so this fails quantitatively; the
//    check reports the measured worst cases.
Outcome check_correlation_property() {
  const NeutrinoParams params;
  const ExactEvolver oracle(params);
  const double dt = 0.01;
  const int points = 2501;  // covers [0, 25]

  std::vector<double> p(points), c(points);
  for (int i = 0; i < points; ++i) {
    const double t = dt * i;
    p[i] = oracle.inversion_probability(t);
    c[i] = concurrence_exact(oracle.state_at(t));
  }
  double p_max = 0.0;
  for (double v : p) p_max = std::max(p_max, v);

  // Discrete sign-change extrema, ignoring sub-1e-9 wiggle.
  auto is_extremum = [](const std::vector<double>& f, int i) {
    const double left = f[i] - f[i - 1];
    const double right = f[i + 1] - f[i];
    return std::abs(left) > 1e-9 && std::abs(right) > 1e-9 && left * right < 0.0;
  };

  double worst_c_at_p_extremum = 0.0;
  double worst_half_gap = 0.0;
  for (int i = 1; i + 1 < points; ++i) {
    if (is_extremum(p, i))
      worst_c_at_p_extremum = std::max(worst_c_at_p_extremum, c[i]);
    if (is_extremum(c, i) && c[i] > c[i - 1])
      worst_half_gap = std::max(worst_half_gap, std::abs(p[i] - p_max / 2.0));
  }
  const bool pass = worst_c_at_p_extremum < 1e-2 && worst_half_gap < 1e-2;
  return {pass, fmt("max concurrence at inversion extrema=%.3f (limit 1e-2), "
                    "max |P - Pmax/2| at concurrence maxima=%.3f (limit 1e-2)",
                    worst_c_at_p_extremum, worst_half_gap)};
}

// 7. The summed and pairwise-distributed Hamiltonian forms are the same
//    operator for randomized parameter sets.
Outcome check_hamiltonian_forms() {
  Xoshiro256 rng(20268);
  double max_gap = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    NeutrinoParams params;
    params.n = 2 + static_cast<int>(rng.uniform_int(3));
    params.theta_nu = rng.uniform() * std::numbers::pi / 2.0;
    params.v_cc = 2.0 * rng.uniform() - 1.0;
    params.coupling_angles.clear();
    for (int p = 1; p < params.n; ++p)
      for (int q = p + 1; q <= params.n; ++q)
        params.coupling_angles[{p, q}] = rng.uniform() * std::numbers::pi;
    params.initial_flavours.assign(static_cast<std::size_t>(params.n), 'e');
    for (char& ch : params.initial_flavours)
      if (rng.uniform() < 0.5) ch = 'm';
    max_gap = std::max(
        max_gap, max_abs(hamiltonian_summed(params) - hamiltonian_reduced(params)));
  }
  return {max_gap < 1e-12,
          fmt("max elementwise gap over 100 random sets (n in {2,3,4}) = %.2e "
              "(limit 1e-12)",
              max_gap)};
}

// 8. Depolarising plus readout noise pulls the sampled concurrence at its
//    theoretical maxima strictly below the noiseless estimate.
Outcome check_noise_dip() {
  const NeutrinoParams params;
  const NoiseModel noise;
  std::string detail;
  bool pass = true;
  for (const double t_peak : {kEnvelopePeriod / 4.0, 3.0 * kEnvelopePeriod / 4.0}) {
    const Circuit circuit = concurrence_circuit(params, t_peak, 1);
    const StateVector ideal = run_statevector(circuit);
    double clean_sum = 0.0;
    double noisy_sum = 0.0;
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
      const Counts clean = sample_counts(ideal, 4096, seed);
      clean_sum += concurrence_from_counts(marginal_counts(clean, {0}));
      const Counts dirty = run_noisy(circuit, init_zero_state(5), 4096, noise, seed);
      noisy_sum += concurrence_from_counts(marginal_counts(dirty, {0}));
    }
    const double clean_mean = clean_sum / 10.0;
    const double noisy_mean = noisy_sum / 10.0;
    pass = pass && noisy_mean < clean_mean;
    detail += fmt("t=%.3f: noiseless=%.4f noisy=%.4f dip=%.4f  ", t_peak,
                  clean_mean, noisy_mean, clean_mean - noisy_mean);
  }
  return {pass, detail + "(10 seeds each, noisy must be strictly lower)"};
}

// 9. Identical configuration and seed give byte-identical CSV output on
//    consecutive runs, for both plain sampling and noisy sampling.
Outcome check_reproducibility() {
  ExperimentConfig invert = default_config(ExperimentKind::kInvert);
  invert.points = 51;
  invert.mode = RunMode::kShots;
  invert.shots = 2048;
  invert.seed = 424242;
  const std::string invert_a = to_csv(run_experiment(invert));
  const std::string invert_b = to_csv(run_experiment(invert));

  ExperimentConfig conc = default_config(ExperimentKind::kConcurrence);
  conc.points = 21;
  conc.t_max = 2.0 * kEnvelopePeriod;
  conc.mode = RunMode::kNoisy;
  conc.shots = 512;
  conc.seed = 99;
  const std::string conc_a = to_csv(run_experiment(conc));
  const std::string conc_b = to_csv(run_experiment(conc));

  ExperimentConfig reseeded = invert;
  reseeded.seed = 424243;
  const std::string other = to_csv(run_experiment(reseeded));

  const bool pass = invert_a == invert_b && conc_a == conc_b && other != invert_a;
  return {pass, fmt("sampled rerun identical: %s, noisy rerun identical: %s, "
                    "reseeded run differs: %s",
                    invert_a == invert_b ? "yes" : "no",
                    conc_a == conc_b ? "yes" : "no",
                    other != invert_a ? "yes" : "no")};
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome()> run;
  double time_limit_s;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "vacuum oscillation amplitude", check_vacuum_amplitude, 1.0},
      {2, "two-body single-step exactness", check_two_body_exactness, 5.0},
      {3, "interaction gate decomposition", check_decomposition_fidelity, 5.0},
      {4, "three-body trotter convergence", check_trotter_convergence, 30.0},
      {5, "swap-test concurrence pipeline", check_concurrence_pipeline, 30.0},
      {6, "concurrence/inversion correlation", check_correlation_property, 5.0},
      {7, "hamiltonian form equivalence", check_hamiltonian_forms, 5.0},
      {8, "noise dip at peak entanglement", check_noise_dip, 60.0},
      {9, "byte-identical reruns", check_reproducibility, 30.0},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > criterion.time_limit_s) {
      outcome.pass = false;
      outcome.detail += fmt(" [exceeded %.0f s budget]", criterion.time_limit_s);
    }
    if (!outcome.pass) ++failures;
    std::printf("%s  %d  %-36s %7.3f s  %s\n", outcome.pass ? "PASS" : "FAIL",
                criterion.number, criterion.name, elapsed, outcome.detail.c_str());
  }
  std::printf("%zu of %zu checks passed\n", criteria.size() - failures,
              criteria.size());
  return failures;
}
