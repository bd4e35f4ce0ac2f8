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

#ifndef NUQSIM_DECOMP_HPP
#define NUQSIM_DECOMP_HPP

// Gate decompositions:
//  * the canonical 3-CNOT circuit for exp(-i (hx XX + hy YY + hz ZZ)),
//  * the 3-rotation single-qubit circuit for exp(-i alpha b.sigma) with
//    the field axis b = (sin 2theta, 0, -cos 2theta),
//  * circuit conjugation and the spin-flip layer used to prepare the
//    conjugated register of the concurrence measurement.
//
// Emitted circuits realize their target unitary up to a global phase,
// which no measured quantity observes; verification uses a
// phase-insensitive distance throughout.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nuqsim/qsim.hpp"

namespace nuqsim {

struct XYZCoefficients {
  double hx = 0.0;
  double hy = 0.0;
  double hz = 0.0;
};

namespace detail {

inline Mat mat_h() {
  const double r = 1.0 / std::sqrt(2.0);
  Mat m(2, 2);
  m(0, 0) = r;
  m(0, 1) = r;
  m(1, 0) = r;
  m(1, 1) = -r;
  return m;
}

inline Mat mat_rx(double theta) { return u3_matrix(theta, -std::numbers::pi / 2.0, std::numbers::pi / 2.0); }

}  // namespace detail

// Y gate, emitted as a raw matrix since the gate vocabulary has no
// dedicated Y kind.
inline GateOp pauli_y_gate(int q) {
  Mat y(2, 2);
  y(0, 1) = cplx(0.0, -1.0);
  y(1, 0) = cplx(0.0, 1.0);
  return GateOp::raw1q(q, std::move(y));
}

// Canonical two-qubit circuit for exp(-i (hx XX + hy YY + hz ZZ)) up to a
// global phase: three CNOTs with single-qubit dressings
//
//   CNOT, (U2 x V2), CNOT, (U3 x V3), CNOT, (U4 x V4)
//
// listed in application order, U gates on qubit_a (the CNOT control) and
// V gates on qubit_b. The slots are
//
//   U2 = H Rx(2 hx - pi/2)   V2 = Rz(2 hz)
//   U3 = H                   V3 = Rz(-2 hy)
//   U4 = Rx(pi/2)            V4 = Rx(-pi/2)
//
// When hx = hy = hz the dressed forms U2 = (i/sqrt2)(X+Z) exp(-i(h-pi/4)X)
// and U3 = (-i/sqrt2)(X+Z) are emitted literally; the extra factors of
// +-i cancel, so both paths give the same unitary.
inline Circuit xyz_propagator_circuit(const XYZCoefficients& h, int qubit_a, int qubit_b) {
  if (qubit_a == qubit_b)
    throw std::invalid_argument("xyz_propagator_circuit: qubits must be distinct");
  const double half_pi = std::numbers::pi / 2.0;
  Circuit c(std::max(qubit_a, qubit_b) + 1);
  const bool equal_couplings = (h.hx == h.hy) && (h.hy == h.hz);

  c.append(GateOp::cnot(qubit_a, qubit_b));
  if (equal_couplings) {
    const cplx i(0.0, 1.0);
    c.append(GateOp::raw1q(qubit_a, i * (detail::mat_h() * detail::mat_rx(2.0 * h.hx - half_pi))));
  } else {
    c.append(GateOp::raw1q(qubit_a, detail::mat_h() * detail::mat_rx(2.0 * h.hx - half_pi)));
  }
  c.append(GateOp::rz(qubit_b, 2.0 * h.hz));

  c.append(GateOp::cnot(qubit_a, qubit_b));
  if (equal_couplings) {
    c.append(GateOp::raw1q(qubit_a, cplx(0.0, -1.0) * detail::mat_h()));
  } else {
    c.append(GateOp::h(qubit_a));
  }
  c.append(GateOp::rz(qubit_b, -2.0 * h.hy));

  c.append(GateOp::cnot(qubit_a, qubit_b));
  c.append(GateOp::u3(qubit_a, half_pi, -half_pi, half_pi));
  c.append(GateOp::u3(qubit_b, half_pi, half_pi, -half_pi));
  return c;
}

// Single-qubit circuit for exp(-i alpha b.sigma) with the unit field axis
// b = (sin 2theta, 0, -cos 2theta): a Ry change of basis tilts z onto b,
// giving the matrix product Ry(beta) Rz(2 alpha) Ry(-beta) with
// beta = pi - 2 theta.
inline Circuit bfield_rotation_circuit(double theta_nu, double alpha, int qubit) {
  const double beta = std::numbers::pi - 2.0 * theta_nu;
  Circuit c(qubit + 1);
  c.append(GateOp::ry(qubit, -beta));
  c.append(GateOp::rz(qubit, 2.0 * alpha));
  c.append(GateOp::ry(qubit, beta));
  return c;
}

// Complex conjugate of a circuit's unitary, gate by gate:
//   X, H, Ry, CNOT, SWAP, CSWAP  -> unchanged (real matrices)
//   Rz(t)                        -> Rz(-t)
//   Phase(l)                     -> Phase(-l)
//   U3(t, p, l)                  -> U3(t, -p, -l)
//   raw matrices                 -> elementwise conjugate
inline Circuit conjugate_circuit(const Circuit& c) {
  Circuit out(c.num_qubits);
  out.label = c.label;
  for (const GateOp& op : c.ops) {
    GateOp g = op;
    switch (op.kind) {
      case GateKind::kX:
      case GateKind::kH:
      case GateKind::kRy:
      case GateKind::kCnot:
      case GateKind::kSwap:
      case GateKind::kCswap:
        break;
      case GateKind::kRz:
      case GateKind::kPhase:
        g.params[0] = -op.params[0];
        break;
      case GateKind::kU3:
        g.params[1] = -op.params[1];
        g.params[2] = -op.params[2];
        break;
      case GateKind::kRaw1q:
      case GateKind::kRaw2q: {
        Mat m = op.raw;
        for (int r = 0; r < m.rows(); ++r)
          for (int col = 0; col < m.cols(); ++col) m(r, col) = std::conj(m(r, col));
        g.raw = std::move(m);
        break;
      }
    }
    out.append(std::move(g));
  }
  return out;
}

// Y on each of num_qubits qubits starting at offset. Together with
// conjugation this turns an evolved register into the spin-flipped state
// whose overlap with the original defines concurrence.
inline Circuit spin_flip_circuit(int num_qubits, int offset = 0) {
  if (num_qubits < 1 || offset < 0)
    throw std::invalid_argument("spin_flip_circuit: invalid qubit range");
  Circuit c(offset + num_qubits);
  for (int q = offset; q < offset + num_qubits; ++q) c.append(pauli_y_gate(q));
  return c;
}

}  // namespace nuqsim

#endif  // NUQSIM_DECOMP_HPP
