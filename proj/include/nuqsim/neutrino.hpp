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

#ifndef NUQSIM_NEUTRINO_HPP
#define NUQSIM_NEUTRINO_HPP

// Physics layer for collective neutrino oscillations in the two-flavour
// spin encoding: electron flavour |e> is qubit state |0>, muon flavour
// |m> is |1>.
//
// The dimensionless interaction Hamiltonian (energies in units of the
// self-interaction scale eta, times in 1/eta, hbar = 1) is
//
//   H = sum_k b.sigma_k + (v_cc/2) sum_k sigma_k^z
//       + sum_{p<q} J^{pq} sigma_p.sigma_q
//
// with the unit field axis b = (sin 2theta, 0, -cos 2theta) and pairwise
// couplings J^{pq} = 1 - cos theta^{pq}. An equivalent pairwise-reduced
// grouping distributes the one-body terms over the pairs, dividing by
// n - 1; both assemblies are provided and must agree elementwise.
//
// Index conventions: neutrino p (1-based) occupies qubit n - p, so
// neutrino 1 is the most significant bit and the printed bitstring reads
// in neutrino order. Hamiltonian matrices are assembled with neutrino 1
// as the first Kronecker factor, making matrix indices and statevector
// indices coincide.

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nuqsim/linalg.hpp"
#include "nuqsim/qsim.hpp"

namespace nuqsim {

struct BField {
  double bx = 0.0;
  double by = 0.0;
  double bz = 0.0;
};

inline BField b_vector(double theta_nu) {
  return BField{std::sin(2.0 * theta_nu), 0.0, -std::cos(2.0 * theta_nu)};
}

struct NeutrinoParams {
  int n = 2;
  double theta_nu = 0.195;  // vacuum mixing angle, radians
  // Pairwise interaction angles theta^{pq}, keyed by 1-based (p, q), p < q.
  // Every pair must be present when n >= 2.
  std::map<std::pair<int, int>, double> coupling_angles = {{{1, 2}, std::numbers::pi / 6.0}};
  double delta_m2 = 2e-4;  // eV^2
  double energy = 0.005;   // GeV
  double v_cc = 0.0;       // charged-current potential, units of eta
  std::string initial_flavours = "em";  // one of {e, m} per neutrino

  void validate() const {
    if (n < 1 || n > 10) throw std::invalid_argument("NeutrinoParams: n must be in [1, 10]");
    if (!std::isfinite(theta_nu)) throw std::invalid_argument("NeutrinoParams: theta_nu must be finite");
    if (!(delta_m2 > 0.0)) throw std::invalid_argument("NeutrinoParams: delta_m2 must be positive");
    if (!(energy > 0.0)) throw std::invalid_argument("NeutrinoParams: energy must be positive");
    if (!std::isfinite(v_cc)) throw std::invalid_argument("NeutrinoParams: v_cc must be finite");
    if (static_cast<int>(initial_flavours.size()) != n)
      throw std::invalid_argument("NeutrinoParams: initial_flavours length must equal n");
    for (char ch : initial_flavours)
      if (ch != 'e' && ch != 'm')
        throw std::invalid_argument("NeutrinoParams: flavours must be 'e' or 'm'");
    for (const auto& [pq, angle] : coupling_angles) {
      if (pq.first < 1 || pq.second <= pq.first || pq.second > n)
        throw std::invalid_argument("NeutrinoParams: coupling pair indices must satisfy 1 <= p < q <= n");
      if (!std::isfinite(angle))
        throw std::invalid_argument("NeutrinoParams: coupling angles must be finite");
    }
    for (int p = 1; p < n; ++p)
      for (int q = p + 1; q <= n; ++q)
        if (!coupling_angles.contains({p, q}))
          throw std::invalid_argument("NeutrinoParams: missing coupling angle for pair " +
                                      std::to_string(p) + ":" + std::to_string(q));
  }
};

struct CouplingMatrix {
  int n = 0;
  std::vector<double> j;  // row-major n x n, symmetric, zero diagonal

  // 1-based accessor.
  double operator()(int p, int q) const {
    return j[static_cast<std::size_t>(p - 1) * n + (q - 1)];
  }
};

inline CouplingMatrix coupling_matrix(const NeutrinoParams& params) {
  params.validate();
  CouplingMatrix cm;
  cm.n = params.n;
  cm.j.assign(static_cast<std::size_t>(params.n) * params.n, 0.0);
  for (const auto& [pq, angle] : params.coupling_angles) {
    const double j = 1.0 - std::cos(angle);
    cm.j[static_cast<std::size_t>(pq.first - 1) * params.n + (pq.second - 1)] = j;
    cm.j[static_cast<std::size_t>(pq.second - 1) * params.n + (pq.first - 1)] = j;
  }
  return cm;
}

namespace detail {

inline Mat pauli_x() {
  Mat m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

inline Mat pauli_y() {
  Mat m(2, 2);
  m(0, 1) = cplx(0.0, -1.0);
  m(1, 0) = cplx(0.0, 1.0);
  return m;
}

inline Mat pauli_z() {
  Mat m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

// Embeds single-qubit operators at 1-based neutrino positions (neutrino 1
// is the first Kronecker factor). Position -> operator; identity elsewhere.
inline Mat embed(int n, const std::map<int, const Mat*>& factors) {
  Mat out = Mat::identity(1);
  for (int pos = 1; pos <= n; ++pos) {
    const auto it = factors.find(pos);
    out = kron(out, it == factors.end() ? Mat::identity(2) : *it->second);
  }
  return out;
}

// Effective one-body axis: the b field plus the charged-current z shift.
inline Mat one_body_term(const NeutrinoParams& params) {
  const BField b = b_vector(params.theta_nu);
  return cplx(b.bx) * pauli_x() + cplx(b.by) * pauli_y() +
         cplx(b.bz + params.v_cc / 2.0) * pauli_z();
}

inline Mat pair_coupling_term(int n, int p, int q) {
  const Mat x = pauli_x(), y = pauli_y(), z = pauli_z();
  return embed(n, {{p, &x}, {q, &x}}) + embed(n, {{p, &y}, {q, &y}}) +
         embed(n, {{p, &z}, {q, &z}});
}

}  // namespace detail

// One-body terms summed over neutrinos plus pairwise couplings.
inline Mat hamiltonian_summed(const NeutrinoParams& params) {
  params.validate();
  const int n = params.n;
  const int dim = 1 << n;
  const Mat one_body = detail::one_body_term(params);
  const CouplingMatrix cm = coupling_matrix(params);
  Mat h(dim, dim);
  for (int k = 1; k <= n; ++k) h = h + detail::embed(n, {{k, &one_body}});
  for (int p = 1; p < n; ++p)
    for (int q = p + 1; q <= n; ++q)
      h = h + cplx(cm(p, q)) * detail::pair_coupling_term(n, p, q);
  return h;
}

// Same operator grouped pair by pair: each pair carries its coupling plus
// the two one-body terms scaled by 1/(n-1), so every neutrino's one-body
// term is counted exactly once across its n-1 pairs. For n = 1 the pair
// sum is empty and the one-body term is returned directly.
inline Mat hamiltonian_reduced(const NeutrinoParams& params) {
  params.validate();
  const int n = params.n;
  const Mat one_body = detail::one_body_term(params);
  if (n == 1) return one_body;
  const int dim = 1 << n;
  const CouplingMatrix cm = coupling_matrix(params);
  const cplx scale(1.0 / static_cast<double>(n - 1));
  Mat h(dim, dim);
  for (int p = 1; p < n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      h = h + scale * (detail::embed(n, {{p, &one_body}}) + detail::embed(n, {{q, &one_body}}));
      h = h + cplx(cm(p, q)) * detail::pair_coupling_term(n, p, q);
    }
  return h;
}

inline std::string initial_bitstring(const NeutrinoParams& params) {
  std::string bits;
  bits.reserve(params.initial_flavours.size());
  for (char ch : params.initial_flavours) bits.push_back(ch == 'e' ? '0' : '1');
  return bits;
}

// The flavour-inverted readout target: the initial flavour string
// reversed. Rejects all-same-flavour initial states, whose reversal is
// the initial state itself.
inline std::string inversion_target(const NeutrinoParams& params) {
  const std::string bits = initial_bitstring(params);
  if (bits.find('0') == std::string::npos || bits.find('1') == std::string::npos)
    throw std::invalid_argument("inversion_target: initial state must mix both flavours");
  return std::string(bits.rbegin(), bits.rend());
}

// Exact-evolution oracle with the eigendecomposition computed once, for
// sweeping many times cheaply.
class ExactEvolver {
 public:
  explicit ExactEvolver(const NeutrinoParams& params) : params_(params) {
    params_.validate();
    es_ = eig_hermitian(hamiltonian_summed(params_));
    initial_.assign(std::size_t{1} << params_.n, cplx{});
    initial_[bitstring_to_index(initial_bitstring(params_))] = 1.0;
  }

  const NeutrinoParams& params() const { return params_; }

  StateVector state_at(double t) const {
    StateVector st;
    st.num_qubits = params_.n;
    // t = 0 is the identity; skipping the eigenbasis round trip keeps the
    // initial product state exact instead of 1e-16 from it.
    st.amps = (t == 0.0) ? initial_ : propagate(es_, initial_, t);
    return st;
  }

  double inversion_probability(double t) const {
    return probability_of(state_at(t), inversion_target(params_));
  }

 private:
  NeutrinoParams params_;
  Eigensystem es_;
  std::vector<cplx> initial_;
};

inline StateVector evolve_exact(const NeutrinoParams& params, double t) {
  return ExactEvolver(params).state_at(t);
}

inline double inversion_probability_exact(const NeutrinoParams& params, double t) {
  return ExactEvolver(params).inversion_probability(t);
}

// Pure-state two-qubit concurrence |<psi| Y x Y |psi*>|, which for
// amplitudes (a, b, c, d) over |00>, |01>, |10>, |11> is 2 |a d - b c|.
inline double concurrence_exact(const StateVector& state) {
  if (state.num_qubits != 2)
    throw std::invalid_argument("concurrence_exact: only 2-qubit states supported");
  return 2.0 * std::abs(state.amps[0] * state.amps[3] - state.amps[1] * state.amps[2]);
}

// Two-flavour vacuum oscillation disappearance probability
// sin^2(2 theta) sin^2(1.27 dm2[eV^2] L[km] / E[GeV]).
inline double vacuum_disappearance(double theta, double dm2_ev2, double length_km,
                                   double energy_gev) {
  if (!(energy_gev > 0.0))
    throw std::invalid_argument("vacuum_disappearance: energy must be positive");
  const double amp = std::sin(2.0 * theta);
  const double phase = 1.27 * dm2_ev2 * length_km / energy_gev;
  const double s = std::sin(phase);
  return amp * amp * s * s;
}

}  // namespace nuqsim

#endif  // NUQSIM_NEUTRINO_HPP
