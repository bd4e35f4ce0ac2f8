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

#ifndef NUQSIM_TOLERANCES_HPP
#define NUQSIM_TOLERANCES_HPP

// Central numeric tolerances. Every approximate comparison in the library
// routes through one of these constants so that accuracy contracts are
// documented in a single place.

namespace nuqsim::tol {

// Max element magnitude of A - A^dagger for a matrix accepted as Hermitian.
inline constexpr double kHermitian = 1e-12;

// Max element magnitude of U^dagger U - I for a matrix accepted as unitary.
inline constexpr double kUnitary = 1e-10;

// Allowed statevector norm drift after applying a gate sequence.
inline constexpr double kStateNorm = 1e-9;

// Off-diagonal Frobenius mass (relative to the input norm) at which the
// Jacobi eigensolver declares convergence.
inline constexpr double kJacobiOffDiag = 1e-14;

// Hard cap on Jacobi sweeps; exceeding it raises an error instead of
// returning a half-converged basis.
inline constexpr int kJacobiMaxSweeps = 60;

// Ancilla statistics snap: a swap-test radicand 2*P(0) - 1 below this is
// treated as exactly zero in exact mode, so states with zero concurrence
// report zero instead of a rounding-noise square root.
inline constexpr double kRadicandSnap = 1e-12;

}  // namespace nuqsim::tol

#endif  // NUQSIM_TOLERANCES_HPP
