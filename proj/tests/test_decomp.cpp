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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "nuqsim/decomp.hpp"
#include "nuqsim/linalg.hpp"
#include "nuqsim/qsim.hpp"
#include "oracles.hpp"

namespace nuqsim {
namespace {

using testing::circuit_unitary_bruteforce;
using testing::kron_bruteforce;
using testing::uniform_in;

Mat pauli(char axis) {
  Mat m(2, 2);
  switch (axis) {
    case 'x': m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 'y': m(0, 1) = cplx(0.0, -1.0); m(1, 0) = cplx(0.0, 1.0); break;
    case 'z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
  }
  return m;
}

// hx XX + hy YY + hz ZZ on two qubits, first factor on the high qubit.
Mat xyz_hamiltonian(const XYZCoefficients& h) {
  return cplx(h.hx) * kron_bruteforce(pauli('x'), pauli('x')) +
         cplx(h.hy) * kron_bruteforce(pauli('y'), pauli('y')) +
         cplx(h.hz) * kron_bruteforce(pauli('z'), pauli('z'));
}

double xyz_circuit_error(const XYZCoefficients& h) {
  const Circuit c = xyz_propagator_circuit(h, 1, 0);
  const Mat target = expm_hermitian(xyz_hamiltonian(h), 1.0);
  return distance_up_to_global_phase(circuit_unitary(c), target);
}

TEST_CASE("xyz propagator with zero couplings is the identity up to phase") {
  const Circuit c = xyz_propagator_circuit({0.0, 0.0, 0.0}, 1, 0);
  CHECK(distance_up_to_global_phase(circuit_unitary(c), Mat::identity(4)) < 1e-10);
  CHECK(c.count(GateKind::kCnot) == 3);
}

TEST_CASE("xyz propagator handles the equal-coupling closed form") {
  const double j = 1.0 - std::cos(std::numbers::pi / 6.0);
  for (int k = 1; k <= 20; ++k) {
    const double t = 0.17 * k;
    const double e = xyz_circuit_error({j * t, j * t, j * t});
    CHECK(e < 1e-9);
  }
}

TEST_CASE("xyz propagator handles arbitrary couplings") {
  Xoshiro256 rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const XYZCoefficients h{uniform_in(rng, -std::numbers::pi, std::numbers::pi),
                            uniform_in(rng, -std::numbers::pi, std::numbers::pi),
                            uniform_in(rng, -std::numbers::pi, std::numbers::pi)};
    CHECK(xyz_circuit_error(h) < 1e-9);
  }
}

TEST_CASE("xyz propagator always spends exactly three cnots") {
  const double j = 0.3;
  for (const XYZCoefficients& h :
       {XYZCoefficients{j, j, j}, XYZCoefficients{0.1, 0.2, 0.3},
        XYZCoefficients{0.0, 0.0, 0.0}}) {
    const Circuit c = xyz_propagator_circuit(h, 0, 1);
    CHECK(c.count(GateKind::kCnot) == 3);
    CHECK(c.count(GateKind::kSwap) == 0);
  }
  CHECK_THROWS_AS(xyz_propagator_circuit({0.1, 0.1, 0.1}, 2, 2),
                  std::invalid_argument);
}

TEST_CASE("xyz propagator respects which wire carries which role") {
  // Asymmetric couplings distinguish the two qubit arguments.
  const XYZCoefficients h{0.4, -0.2, 0.7};
  const Mat target = expm_hermitian(xyz_hamiltonian(h), 1.0);
  const Circuit swapped = xyz_propagator_circuit(h, 0, 1);
  // The coupling hamiltonian is symmetric under qubit exchange, so both
  // orders must produce the same unitary.
  CHECK(distance_up_to_global_phase(circuit_unitary(swapped), target) < 1e-9);
}

TEST_CASE("bfield rotation with zero angle is the identity up to phase") {
  const Circuit c = bfield_rotation_circuit(0.195, 0.0, 0);
  CHECK(distance_up_to_global_phase(circuit_unitary(c), Mat::identity(2)) < 1e-10);
}

TEST_CASE("bfield rotation matches the exact one-body propagator") {
  const double theta = 0.195;
  const Mat axis = cplx(std::sin(2.0 * theta)) * pauli('x') -
                   cplx(std::cos(2.0 * theta)) * pauli('z');
  for (const double alpha : {0.1, 0.525, 1.3, 2.0}) {
    const Circuit c = bfield_rotation_circuit(theta, alpha, 0);
    const Mat target = expm_hermitian(axis, alpha);
    CHECK(distance_up_to_global_phase(circuit_unitary(c), target) < 1e-10);
  }
}

TEST_CASE("bfield rotation at forty-five degrees reduces to an x rotation") {
  const double alpha = 0.8;
  const Circuit c = bfield_rotation_circuit(std::numbers::pi / 4.0, alpha, 0);
  const Mat rx = u3_matrix(2.0 * alpha, -std::numbers::pi / 2.0, std::numbers::pi / 2.0);
  CHECK(distance_up_to_global_phase(circuit_unitary(c), rx) < 1e-10);
}

TEST_CASE("conjugate_circuit flips the signs the gate set requires") {
  Circuit c(2);
  c.append(GateOp::x(0));
  c.append(GateOp::phase(1, 0.7));
  c.append(GateOp::rz(0, -0.3));
  c.append(GateOp::u3(1, 0.2, 0.5, -0.9));
  const Circuit conj = conjugate_circuit(c);

  CHECK(conj.ops[0].kind == GateKind::kX);
  CHECK(conj.ops[1].params[0] == -0.7);
  CHECK(conj.ops[2].params[0] == 0.3);
  CHECK(conj.ops[3].params[0] == 0.2);
  CHECK(conj.ops[3].params[1] == -0.5);
  CHECK(conj.ops[3].params[2] == 0.9);
}

TEST_CASE("conjugate_circuit implements elementwise complex conjugation") {
  Xoshiro256 rng(47);
  Circuit c(3);
  c.append(GateOp::h(0));
  c.append(GateOp::ry(1, 0.9));
  c.append(GateOp::rz(2, -1.2));
  c.append(GateOp::phase(0, 2.1));
  c.append(GateOp::u3(1, 0.3, 1.1, -0.4));
  c.append(GateOp::raw1q(2, testing::random_unitary(2, rng)));
  c.append(GateOp::cnot(0, 1));
  c.append(GateOp::swap(1, 2));
  c.append(GateOp::raw2q(0, 2, testing::random_unitary(4, rng)));
  c.append(GateOp::cswap(0, 1, 2));

  const Mat u = circuit_unitary_bruteforce(c);
  const Mat v = circuit_unitary_bruteforce(conjugate_circuit(c));
  double max_diff = 0.0;
  for (int r = 0; r < u.rows(); ++r)
    for (int col = 0; col < u.cols(); ++col)
      max_diff = std::max(max_diff, std::abs(std::conj(u(r, col)) - v(r, col)));
  CHECK(max_diff < 1e-10);

  const Mat w = circuit_unitary_bruteforce(conjugate_circuit(conjugate_circuit(c)));
  CHECK(max_abs(w - u) < 1e-10);
}

TEST_CASE("spin_flip_circuit applies pauli y to every listed qubit") {
  StateVector st = init_zero_state(1);
  st = run_statevector(spin_flip_circuit(1), st);
  CHECK(std::abs(st.amps[1] - cplx(0.0, 1.0)) < 1e-15);

  StateVector two = init_basis_state(2, "01");
  two = run_statevector(spin_flip_circuit(2), two);
  CHECK(std::abs(std::abs(two.amps[2]) - 1.0) < 1e-15);

  const Circuit offset = spin_flip_circuit(2, 1);
  CHECK(offset.num_qubits == 3);
  StateVector three = init_zero_state(3);
  three = run_statevector(offset, three);
  CHECK(probability_of(three, "110") == Catch::Approx(1.0).margin(1e-14));
}

TEST_CASE("spin flip of the conjugate recovers the two-qubit concurrence") {
  Xoshiro256 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    StateVector psi;
    psi.num_qubits = 2;
    psi.amps = testing::random_state(4, rng);

    StateVector tilde;
    tilde.num_qubits = 2;
    tilde.amps = psi.amps;
    for (auto& amp : tilde.amps) amp = std::conj(amp);
    tilde = run_statevector(spin_flip_circuit(2), tilde);

    cplx overlap = 0.0;
    for (int i = 0; i < 4; ++i) overlap += std::conj(psi.amps[i]) * tilde.amps[i];

    const cplx det = psi.amps[0] * psi.amps[3] - psi.amps[1] * psi.amps[2];
    CHECK(std::abs(std::abs(overlap) - 2.0 * std::abs(det)) < 1e-12);
  }
}

}  // namespace
}  // namespace nuqsim
