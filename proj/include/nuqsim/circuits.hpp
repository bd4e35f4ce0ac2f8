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

#ifndef NUQSIM_CIRCUITS_HPP
#define NUQSIM_CIRCUITS_HPP

// Experiment-level circuit assembly:
//  * the one-qubit vacuum oscillation circuit,
//  * the Trotterized n-neutrino evolution circuit,
//  * the (2n+1)-qubit ancilla swap-test circuit estimating pairwise
//    concurrence, plus the estimators mapping ancilla statistics to a
//    concurrence value.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "nuqsim/decomp.hpp"
#include "nuqsim/neutrino.hpp"
#include "nuqsim/qsim.hpp"
#include "nuqsim/tolerances.hpp"

namespace nuqsim {

// Rotation into the mass basis, a relative phase accumulating the flight
// time, rotation back. Starting from |0>, P(1) = sin^2(2 theta)
// sin^2(phase / 2), the two-flavour disappearance probability when
// phase = 2 * 1.27 * dm2 * L / E.
inline Circuit vacuum_circuit(double theta, double phase) {
  Circuit c(1);
  c.label = "vacuum";
  c.append(GateOp::ry(0, -2.0 * theta));
  c.append(GateOp::phase(0, phase));
  c.append(GateOp::ry(0, 2.0 * theta));
  return c;
}

// 1 step suffices for n = 2 where the one-body and coupling terms
// commute; larger systems default to 32.
inline int default_trotter_steps(int n) { return n <= 2 ? 1 : 32; }

namespace detail {

// Neutrino p (1-based) sits on qubit n - p: neutrino 1 is the most
// significant bit, so printed bitstrings read in neutrino order.
inline int qubit_of_neutrino(int n, int p) { return n - p; }

inline void append_xyz_on_pair(Circuit& c, const XYZCoefficients& h, int qa, int qb,
                               bool hardware_swaps) {
  if (!hardware_swaps || std::abs(qa - qb) == 1) {
    append_circuit(c, xyz_propagator_circuit(h, qa, qb));
    return;
  }
  // Route the lower qubit next to the higher one with a swap chain, apply
  // the interaction on the adjacent pair, and undo the routing. The net
  // unitary is identical to the direct application.
  const int lo = std::min(qa, qb);
  const int hi = std::max(qa, qb);
  for (int k = lo; k < hi - 1; ++k) c.append(GateOp::swap(k, k + 1));
  const int routed_lo = hi - 1;
  if (qa == hi)
    append_circuit(c, xyz_propagator_circuit(h, hi, routed_lo));
  else
    append_circuit(c, xyz_propagator_circuit(h, routed_lo, hi));
  for (int k = hi - 2; k >= lo; --k) c.append(GateOp::swap(k, k + 1));
}

}  // namespace detail

// First-order Trotter evolution circuit. Layout:
//  * X state-preparation gates on the muon-flavour qubits,
//  * trotter_steps repetitions of: for each pair p < q in lexicographic
//    order, the one-body field rotation exp(-i alpha b.sigma) on both
//    qubits of the pair with alpha = dt / (n - 1), then the two-qubit
//    interaction exp(-i J^{pq} dt (XX + YY + ZZ)) on (qubit of p, qubit
//    of q). A nonzero v_cc adds Rz(v_cc dt) to every qubit once per step.
//
// t = 0 emits the preparation gates only. With hardware_swaps set,
// non-adjacent pairs are routed through swap chains (and unrouted), which
// changes the gate list but not the unitary.
inline Circuit evolution_circuit(const NeutrinoParams& params, double t, int trotter_steps,
                                 bool hardware_swaps = false) {
  params.validate();
  if (params.n < 2) throw std::invalid_argument("evolution_circuit: n must be >= 2");
  if (trotter_steps < 1)
    throw std::invalid_argument("evolution_circuit: trotter_steps must be >= 1");
  const int n = params.n;
  Circuit c(n);
  c.label = "evolution n=" + std::to_string(n);
  for (int p = 1; p <= n; ++p)
    if (params.initial_flavours[static_cast<std::size_t>(p - 1)] == 'm')
      c.append(GateOp::x(detail::qubit_of_neutrino(n, p)));
  if (t == 0.0) return c;

  const CouplingMatrix cm = coupling_matrix(params);
  const double dt = t / trotter_steps;
  const double alpha = dt / static_cast<double>(n - 1);
  for (int step = 0; step < trotter_steps; ++step) {
    if (params.v_cc != 0.0)
      for (int q = 0; q < n; ++q) c.append(GateOp::rz(q, params.v_cc * dt));
    for (int p = 1; p < n; ++p) {
      for (int q = p + 1; q <= n; ++q) {
        const int qa = detail::qubit_of_neutrino(n, p);
        const int qb = detail::qubit_of_neutrino(n, q);
        append_circuit(c, bfield_rotation_circuit(params.theta_nu, alpha, qa));
        append_circuit(c, bfield_rotation_circuit(params.theta_nu, alpha, qb));
        const double h = cm(p, q) * dt;
        detail::append_xyz_on_pair(c, XYZCoefficients{h, h, h}, qa, qb, hardware_swaps);
      }
    }
  }
  return c;
}

// Swap-test concurrence circuit for n = 2, five qubits total:
//   qubit 0      ancilla
//   qubits 1, 2  register B: conjugated evolution then a Y spin flip,
//                preparing the spin-flipped state
//   qubits 3, 4  register A: the evolution circuit
// followed by H on the ancilla, CSWAP(0; 3, 1), CSWAP(0; 4, 2), H. Only
// the ancilla is read out: P(0) = (1 + |<psi|psi~>|^2) / 2, and the
// overlap magnitude is the concurrence.
inline Circuit concurrence_circuit(const NeutrinoParams& params, double t, int trotter_steps) {
  if (params.n != 2)
    throw std::invalid_argument("concurrence_circuit: only n = 2 supported");
  const Circuit evol = evolution_circuit(params, t, trotter_steps);
  Circuit c(5);
  c.label = "concurrence";
  append_circuit(c, evol, 3);
  append_circuit(c, conjugate_circuit(evol), 1);
  append_circuit(c, spin_flip_circuit(2, 1));
  c.append(GateOp::h(0));
  c.append(GateOp::cswap(0, 3, 1));
  c.append(GateOp::cswap(0, 4, 2));
  c.append(GateOp::h(0));
  return c;
}

// Concurrence from an exact ancilla survival probability. The radicand
// 2 P(0) - 1 is snapped to zero below kRadicandSnap so product states
// report exactly zero instead of rounding noise.
inline double concurrence_from_survival(double p0) {
  const double radicand = 2.0 * p0 - 1.0;
  if (radicand < tol::kRadicandSnap) return 0.0;
  return std::sqrt(radicand);
}

// Concurrence from sampled ancilla counts (keys "0"/"1"). Shot noise can
// push P(0) below 1/2; the radicand is clamped at zero since concurrence
// is real by construction.
inline double concurrence_from_counts(const Counts& ancilla_counts) {
  if (ancilla_counts.shots == 0)
    throw std::invalid_argument("concurrence_from_counts: counts are empty");
  if (ancilla_counts.num_qubits != 1)
    throw std::invalid_argument("concurrence_from_counts: expected single-qubit counts");
  const double p0 = ancilla_counts.probability_of("0");
  const double radicand = std::max(2.0 * p0 - 1.0, 0.0);
  return std::sqrt(radicand);
}

}  // namespace nuqsim

#endif  // NUQSIM_CIRCUITS_HPP
