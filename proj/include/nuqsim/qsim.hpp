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

#ifndef NUQSIM_QSIM_HPP
#define NUQSIM_QSIM_HPP

// Gate-level statevector simulator.
//
// Conventions, fixed across the whole library:
//  * Qubit k corresponds to bit k of the amplitude index (little-endian
//    storage). Qubit 0 is the least significant bit.
//  * Printed bitstrings are most-significant-bit first, so the amplitude
//    index of a printed string is its value read as a binary numeral, and
//    the character for qubit k sits at string position n - 1 - k.
//  * A two-qubit gate on (a, b) uses the local basis |bit_a bit_b> with
//    bit_a as the more significant bit; a three-qubit gate on (c, a, b)
//    uses |bit_c bit_a bit_b> likewise. CNOT(control, target) is the
//    matrix [[1,0,0,0],[0,1,0,0],[0,0,0,1],[0,0,1,0]] in that ordering.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nuqsim/linalg.hpp"
#include "nuqsim/rng.hpp"
#include "nuqsim/tolerances.hpp"

namespace nuqsim {

inline std::uint64_t bitstring_to_index(const std::string& bits) {
  std::uint64_t idx = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("bitstring_to_index: characters must be 0 or 1");
    idx = (idx << 1) | static_cast<std::uint64_t>(ch - '0');
  }
  return idx;
}

inline std::string index_to_bitstring(std::uint64_t idx, int num_qubits) {
  std::string out(static_cast<std::size_t>(num_qubits), '0');
  for (int k = 0; k < num_qubits; ++k)
    if (idx & (std::uint64_t{1} << k)) out[static_cast<std::size_t>(num_qubits - 1 - k)] = '1';
  return out;
}

struct StateVector {
  int num_qubits = 0;
  std::vector<cplx> amps;

  double norm() const {
    double acc = 0.0;
    for (const cplx& a : amps) acc += std::norm(a);
    return std::sqrt(acc);
  }
};

inline StateVector init_zero_state(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 24)
    throw std::invalid_argument("init_zero_state: qubit count out of range");
  StateVector st;
  st.num_qubits = num_qubits;
  st.amps.assign(std::size_t{1} << num_qubits, cplx{});
  st.amps[0] = 1.0;
  return st;
}

inline StateVector init_basis_state(int num_qubits, const std::string& bits) {
  if (static_cast<int>(bits.size()) != num_qubits)
    throw std::invalid_argument("init_basis_state: bitstring length mismatch");
  StateVector st = init_zero_state(num_qubits);
  st.amps[0] = 0.0;
  st.amps[bitstring_to_index(bits)] = 1.0;
  return st;
}

inline double probability_of(const StateVector& st, const std::string& bits) {
  if (static_cast<int>(bits.size()) != st.num_qubits)
    throw std::invalid_argument("probability_of: bitstring length mismatch");
  return std::norm(st.amps[bitstring_to_index(bits)]);
}

// Probability that measuring one qubit yields the given bit value.
inline double marginal_probability(const StateVector& st, int qubit, int bit) {
  if (qubit < 0 || qubit >= st.num_qubits)
    throw std::invalid_argument("marginal_probability: qubit index out of range");
  if (bit != 0 && bit != 1)
    throw std::invalid_argument("marginal_probability: bit must be 0 or 1");
  const std::uint64_t mask = std::uint64_t{1} << qubit;
  double acc = 0.0;
  for (std::size_t i = 0; i < st.amps.size(); ++i)
    if (static_cast<int>((i & mask) != 0) == bit) acc += std::norm(st.amps[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// Gates and circuits.

enum class GateKind {
  kX,
  kH,
  kRy,
  kRz,
  kPhase,
  kU3,
  kRaw1q,
  kCnot,
  kSwap,
  kRaw2q,
  kCswap,
};

inline Mat u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Mat m(2, 2);
  m(0, 0) = c;
  m(0, 1) = -std::exp(cplx(0.0, lambda)) * s;
  m(1, 0) = std::exp(cplx(0.0, phi)) * s;
  m(1, 1) = std::exp(cplx(0.0, phi + lambda)) * c;
  return m;
}

struct GateOp {
  GateKind kind = GateKind::kX;
  std::array<int, 3> qubits = {-1, -1, -1};
  std::array<double, 3> params = {0.0, 0.0, 0.0};
  Mat raw;  // populated for kRaw1q / kRaw2q only

  int arity() const {
    switch (kind) {
      case GateKind::kCnot:
      case GateKind::kSwap:
      case GateKind::kRaw2q:
        return 2;
      case GateKind::kCswap:
        return 3;
      default:
        return 1;
    }
  }

  static GateOp x(int q) { return GateOp{GateKind::kX, {q, -1, -1}}; }
  static GateOp h(int q) { return GateOp{GateKind::kH, {q, -1, -1}}; }
  static GateOp ry(int q, double theta) {
    return GateOp{GateKind::kRy, {q, -1, -1}, {theta, 0.0, 0.0}};
  }
  static GateOp rz(int q, double theta) {
    return GateOp{GateKind::kRz, {q, -1, -1}, {theta, 0.0, 0.0}};
  }
  static GateOp phase(int q, double lambda) {
    return GateOp{GateKind::kPhase, {q, -1, -1}, {lambda, 0.0, 0.0}};
  }
  static GateOp u3(int q, double theta, double phi, double lambda) {
    return GateOp{GateKind::kU3, {q, -1, -1}, {theta, phi, lambda}};
  }
  static GateOp raw1q(int q, Mat m) {
    if (m.rows() != 2 || m.cols() != 2)
      throw std::invalid_argument("raw1q: matrix must be 2x2");
    if (!is_unitary(m)) throw std::invalid_argument("raw1q: matrix must be unitary");
    GateOp op{GateKind::kRaw1q, {q, -1, -1}};
    op.raw = std::move(m);
    return op;
  }
  static GateOp cnot(int control, int target) {
    return GateOp{GateKind::kCnot, {control, target, -1}};
  }
  static GateOp swap(int a, int b) { return GateOp{GateKind::kSwap, {a, b, -1}}; }
  static GateOp raw2q(int a, int b, Mat m) {
    if (m.rows() != 4 || m.cols() != 4)
      throw std::invalid_argument("raw2q: matrix must be 4x4");
    if (!is_unitary(m)) throw std::invalid_argument("raw2q: matrix must be unitary");
    GateOp op{GateKind::kRaw2q, {a, b, -1}};
    op.raw = std::move(m);
    return op;
  }
  static GateOp cswap(int control, int a, int b) {
    return GateOp{GateKind::kCswap, {control, a, b}};
  }
};

// Local unitary of a gate in the qubit ordering documented above:
// 2x2, 4x4, or 8x8 depending on arity.
inline Mat local_matrix(const GateOp& op) {
  switch (op.kind) {
    case GateKind::kX: {
      Mat m(2, 2);
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      return m;
    }
    case GateKind::kH: {
      const double r = 1.0 / std::sqrt(2.0);
      Mat m(2, 2);
      m(0, 0) = r;
      m(0, 1) = r;
      m(1, 0) = r;
      m(1, 1) = -r;
      return m;
    }
    case GateKind::kRy:
      return u3_matrix(op.params[0], 0.0, 0.0);
    case GateKind::kRz: {
      Mat m(2, 2);
      m(0, 0) = std::exp(cplx(0.0, -op.params[0] / 2.0));
      m(1, 1) = std::exp(cplx(0.0, op.params[0] / 2.0));
      return m;
    }
    case GateKind::kPhase: {
      Mat m(2, 2);
      m(0, 0) = 1.0;
      m(1, 1) = std::exp(cplx(0.0, op.params[0]));
      return m;
    }
    case GateKind::kU3:
      return u3_matrix(op.params[0], op.params[1], op.params[2]);
    case GateKind::kRaw1q:
    case GateKind::kRaw2q:
      return op.raw;
    case GateKind::kCnot: {
      Mat m = Mat::identity(4);
      m(2, 2) = 0.0;
      m(3, 3) = 0.0;
      m(2, 3) = 1.0;
      m(3, 2) = 1.0;
      return m;
    }
    case GateKind::kSwap: {
      Mat m = Mat::identity(4);
      m(1, 1) = 0.0;
      m(2, 2) = 0.0;
      m(1, 2) = 1.0;
      m(2, 1) = 1.0;
      return m;
    }
    case GateKind::kCswap: {
      Mat m = Mat::identity(8);
      m(5, 5) = 0.0;
      m(6, 6) = 0.0;
      m(5, 6) = 1.0;
      m(6, 5) = 1.0;
      return m;
    }
  }
  throw std::logic_error("local_matrix: unknown gate kind");
}

struct Circuit {
  int num_qubits = 0;
  std::vector<GateOp> ops;
  std::string label;

  explicit Circuit(int n = 0) : num_qubits(n) {}

  void append(GateOp op) {
    const int k = op.arity();
    for (int i = 0; i < k; ++i) {
      if (op.qubits[i] < 0 || op.qubits[i] >= num_qubits)
        throw std::invalid_argument("Circuit::append: qubit index out of range");
      for (int j = i + 1; j < k; ++j)
        if (op.qubits[i] == op.qubits[j])
          throw std::invalid_argument("Circuit::append: repeated qubit in gate");
    }
    ops.push_back(std::move(op));
  }

  int count(GateKind kind) const {
    int n = 0;
    for (const GateOp& op : ops) n += (op.kind == kind);
    return n;
  }
};

// Appends src's gates onto dst with all qubit indices shifted by offset.
inline void append_circuit(Circuit& dst, const Circuit& src, int offset = 0) {
  for (const GateOp& op : src.ops) {
    GateOp shifted = op;
    for (int i = 0; i < op.arity(); ++i) shifted.qubits[i] = op.qubits[i] + offset;
    dst.append(std::move(shifted));
  }
}

// ---------------------------------------------------------------------------
// Gate application kernels.

namespace detail {

inline void apply_1q_matrix(StateVector& st, int q, const Mat& m) {
  const std::uint64_t mask = std::uint64_t{1} << q;
  const std::uint64_t dim = st.amps.size();
  const cplx m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    const cplx a0 = st.amps[i];
    const cplx a1 = st.amps[i | mask];
    st.amps[i] = m00 * a0 + m01 * a1;
    st.amps[i | mask] = m10 * a0 + m11 * a1;
  }
}

inline void apply_2q_matrix(StateVector& st, int qa, int qb, const Mat& m) {
  const std::uint64_t ma = std::uint64_t{1} << qa;
  const std::uint64_t mb = std::uint64_t{1} << qb;
  const std::uint64_t dim = st.amps.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & (ma | mb)) continue;
    const std::uint64_t idx[4] = {i, i | mb, i | ma, i | ma | mb};
    cplx in[4];
    for (int k = 0; k < 4; ++k) in[k] = st.amps[idx[k]];
    for (int r = 0; r < 4; ++r) {
      cplx acc = 0.0;
      for (int c = 0; c < 4; ++c) acc += m(r, c) * in[c];
      st.amps[idx[r]] = acc;
    }
  }
}

}  // namespace detail

inline void apply_gate(StateVector& st, const GateOp& op) {
  for (int i = 0; i < op.arity(); ++i)
    if (op.qubits[i] < 0 || op.qubits[i] >= st.num_qubits)
      throw std::invalid_argument("apply_gate: qubit index out of range");
  const std::uint64_t dim = st.amps.size();
  switch (op.kind) {
    case GateKind::kX: {
      const std::uint64_t mask = std::uint64_t{1} << op.qubits[0];
      for (std::uint64_t i = 0; i < dim; ++i)
        if (!(i & mask)) std::swap(st.amps[i], st.amps[i | mask]);
      return;
    }
    case GateKind::kRz: {
      const std::uint64_t mask = std::uint64_t{1} << op.qubits[0];
      const cplx lo = std::exp(cplx(0.0, -op.params[0] / 2.0));
      const cplx hi = std::exp(cplx(0.0, op.params[0] / 2.0));
      for (std::uint64_t i = 0; i < dim; ++i) st.amps[i] *= (i & mask) ? hi : lo;
      return;
    }
    case GateKind::kPhase: {
      const std::uint64_t mask = std::uint64_t{1} << op.qubits[0];
      const cplx hi = std::exp(cplx(0.0, op.params[0]));
      for (std::uint64_t i = 0; i < dim; ++i)
        if (i & mask) st.amps[i] *= hi;
      return;
    }
    case GateKind::kH:
    case GateKind::kRy:
    case GateKind::kU3:
    case GateKind::kRaw1q:
      detail::apply_1q_matrix(st, op.qubits[0], local_matrix(op));
      return;
    case GateKind::kCnot: {
      const std::uint64_t mc = std::uint64_t{1} << op.qubits[0];
      const std::uint64_t mt = std::uint64_t{1} << op.qubits[1];
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & mc) && !(i & mt)) std::swap(st.amps[i], st.amps[i | mt]);
      return;
    }
    case GateKind::kSwap: {
      const std::uint64_t ma = std::uint64_t{1} << op.qubits[0];
      const std::uint64_t mb = std::uint64_t{1} << op.qubits[1];
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & ma) && !(i & mb)) std::swap(st.amps[i], st.amps[(i ^ ma) | mb]);
      return;
    }
    case GateKind::kRaw2q:
      detail::apply_2q_matrix(st, op.qubits[0], op.qubits[1], op.raw);
      return;
    case GateKind::kCswap: {
      const std::uint64_t mc = std::uint64_t{1} << op.qubits[0];
      const std::uint64_t ma = std::uint64_t{1} << op.qubits[1];
      const std::uint64_t mb = std::uint64_t{1} << op.qubits[2];
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & mc) && (i & ma) && !(i & mb))
          std::swap(st.amps[i], st.amps[(i ^ ma) | mb]);
      return;
    }
  }
  throw std::logic_error("apply_gate: unknown gate kind");
}

// Pauli codes: 1 = X, 2 = Y, 3 = Z. Used by the depolarizing noise model.
inline void apply_pauli(StateVector& st, int q, int code) {
  const std::uint64_t mask = std::uint64_t{1} << q;
  const std::uint64_t dim = st.amps.size();
  switch (code) {
    case 1:
      for (std::uint64_t i = 0; i < dim; ++i)
        if (!(i & mask)) std::swap(st.amps[i], st.amps[i | mask]);
      return;
    case 2:
      for (std::uint64_t i = 0; i < dim; ++i)
        if (!(i & mask)) {
          const cplx a0 = st.amps[i];
          st.amps[i] = cplx(0.0, -1.0) * st.amps[i | mask];
          st.amps[i | mask] = cplx(0.0, 1.0) * a0;
        }
      return;
    case 3:
      for (std::uint64_t i = 0; i < dim; ++i)
        if (i & mask) st.amps[i] = -st.amps[i];
      return;
    default:
      throw std::invalid_argument("apply_pauli: code must be 1, 2 or 3");
  }
}

inline StateVector run_statevector(const Circuit& circuit, StateVector state) {
  if (state.num_qubits != circuit.num_qubits)
    throw std::invalid_argument("run_statevector: state size mismatch");
  for (const GateOp& op : circuit.ops) apply_gate(state, op);
  if (std::abs(state.norm() - 1.0) > tol::kStateNorm)
    throw std::runtime_error("run_statevector: norm drifted beyond tolerance");
  return state;
}

inline StateVector run_statevector(const Circuit& circuit) {
  return run_statevector(circuit, init_zero_state(circuit.num_qubits));
}

// Full unitary of a circuit, built by running every basis column. Intended
// for verification on small circuits.
inline Mat circuit_unitary(const Circuit& circuit) {
  if (circuit.num_qubits > 12)
    throw std::invalid_argument("circuit_unitary: too many qubits");
  const int dim = 1 << circuit.num_qubits;
  Mat u(dim, dim);
  for (int col = 0; col < dim; ++col) {
    StateVector st;
    st.num_qubits = circuit.num_qubits;
    st.amps.assign(static_cast<std::size_t>(dim), cplx{});
    st.amps[static_cast<std::size_t>(col)] = 1.0;
    st = run_statevector(circuit, std::move(st));
    for (int row = 0; row < dim; ++row) u(row, col) = st.amps[static_cast<std::size_t>(row)];
  }
  return u;
}

// ---------------------------------------------------------------------------
// Sampling and noise.

struct Counts {
  int num_qubits = 0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> histogram;

  double probability_of(const std::string& bits) const {
    const auto it = histogram.find(bits);
    if (it == histogram.end()) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(shots);
  }
};

// Per-gate depolarizing insertions plus independent readout bit flips.
// A probability of exactly zero draws nothing from the random stream, so a
// run with an all-zero model consumes the same stream as noiseless
// sampling and reproduces it bit for bit.
struct NoiseModel {
  double p_depol_1q = 5e-4;
  double p_depol_2q = 1e-2;
  double p_readout_flip = 2e-2;

  static NoiseModel none() { return NoiseModel{0.0, 0.0, 0.0}; }

  bool all_zero() const {
    return p_depol_1q == 0.0 && p_depol_2q == 0.0 && p_readout_flip == 0.0;
  }

  void validate() const {
    for (double p : {p_depol_1q, p_depol_2q, p_readout_flip})
      if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("NoiseModel: probabilities must lie in [0, 1]");
  }
};

namespace detail {

inline std::vector<double> cumulative_probabilities(const StateVector& st) {
  std::vector<double> cdf(st.amps.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < st.amps.size(); ++i) {
    acc += std::norm(st.amps[i]);
    cdf[i] = acc;
  }
  return cdf;
}

inline std::uint64_t draw_index(const std::vector<double>& cdf, Xoshiro256& rng) {
  const double u = rng.uniform() * cdf.back();
  const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  return static_cast<std::uint64_t>(it - cdf.begin());
}

}  // namespace detail

// Multinomial sampling of measurement outcomes in the computational basis.
// Shot s draws from rng_for_shot(seed, s): one uniform for the outcome,
// then, only when a noise model with nonzero p_readout_flip is supplied,
// one uniform per qubit (ascending) deciding a readout bit flip.
inline Counts sample_counts(const StateVector& state, std::uint64_t shots,
                            std::uint64_t seed, const NoiseModel* noise = nullptr) {
  if (shots < 1) throw std::invalid_argument("sample_counts: shots must be >= 1");
  if (noise != nullptr) noise->validate();
  const double p_flip = (noise != nullptr) ? noise->p_readout_flip : 0.0;
  const std::vector<double> cdf = detail::cumulative_probabilities(state);
  Counts counts;
  counts.num_qubits = state.num_qubits;
  counts.shots = shots;
  counts.seed = seed;
  for (std::uint64_t s = 0; s < shots; ++s) {
    Xoshiro256 rng = rng_for_shot(seed, s);
    std::uint64_t idx = detail::draw_index(cdf, rng);
    if (p_flip > 0.0) {
      for (int q = 0; q < state.num_qubits; ++q)
        if (rng.uniform() < p_flip) idx ^= std::uint64_t{1} << q;
    }
    ++counts.histogram[index_to_bitstring(idx, state.num_qubits)];
  }
  return counts;
}

// Monte-Carlo trajectory sampling under the depolarizing + readout model.
//
// Shot s consumes rng_for_shot(seed, s) in a fixed documented order:
//  1. Per gate, in circuit order: one uniform against the gate's error
//     probability (1-qubit gates use p_depol_1q, wider gates p_depol_2q),
//     drawn only if that probability is nonzero. On a hit, one integer
//     draw picks a uniformly random non-identity Pauli string on the
//     gate's qubits; base-4 digit j of (draw + 1) is the Pauli code for
//     the gate's j-th qubit.
//  2. One uniform for the measurement outcome.
//  3. Per qubit, ascending: one uniform against p_readout_flip, drawn only
//     if it is nonzero; a hit flips that qubit's readout bit.
//
// Shots without Pauli insertions reuse the cached noiseless state instead
// of replaying the circuit.
inline Counts run_noisy(const Circuit& circuit, const StateVector& initial,
                        std::uint64_t shots, const NoiseModel& noise,
                        std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("run_noisy: shots must be >= 1");
  noise.validate();
  const StateVector ideal = run_statevector(circuit, initial);
  const std::vector<double> ideal_cdf = detail::cumulative_probabilities(ideal);

  Counts counts;
  counts.num_qubits = circuit.num_qubits;
  counts.shots = shots;
  counts.seed = seed;

  struct Insertion {
    std::size_t op_index;
    std::uint64_t pauli;  // base-4 digits over the gate's qubits, nonzero
  };
  std::vector<Insertion> insertions;

  for (std::uint64_t s = 0; s < shots; ++s) {
    Xoshiro256 rng = rng_for_shot(seed, s);
    insertions.clear();
    for (std::size_t j = 0; j < circuit.ops.size(); ++j) {
      const int arity = circuit.ops[j].arity();
      const double p = (arity == 1) ? noise.p_depol_1q : noise.p_depol_2q;
      if (p <= 0.0) continue;
      if (rng.uniform() < p) {
        const std::uint64_t strings = (std::uint64_t{1} << (2 * arity)) - 1;
        insertions.push_back({j, rng.uniform_int(strings) + 1});
      }
    }

    std::uint64_t idx;
    if (insertions.empty()) {
      idx = detail::draw_index(ideal_cdf, rng);
    } else {
      StateVector st = initial;
      std::size_t next = 0;
      for (std::size_t j = 0; j < circuit.ops.size(); ++j) {
        apply_gate(st, circuit.ops[j]);
        while (next < insertions.size() && insertions[next].op_index == j) {
          std::uint64_t pauli = insertions[next].pauli;
          for (int q = 0; q < circuit.ops[j].arity(); ++q) {
            const int code = static_cast<int>(pauli & 3);
            if (code != 0) apply_pauli(st, circuit.ops[j].qubits[q], code);
            pauli >>= 2;
          }
          ++next;
        }
      }
      const std::vector<double> cdf = detail::cumulative_probabilities(st);
      idx = detail::draw_index(cdf, rng);
    }

    if (noise.p_readout_flip > 0.0) {
      for (int q = 0; q < circuit.num_qubits; ++q)
        if (rng.uniform() < noise.p_readout_flip) idx ^= std::uint64_t{1} << q;
    }
    ++counts.histogram[index_to_bitstring(idx, circuit.num_qubits)];
  }
  return counts;
}

// Histogram over a subset of qubits. The listed qubits supply the printed
// characters of the marginal keys, first listed leftmost.
inline Counts marginal_counts(const Counts& counts, const std::vector<int>& qubits) {
  for (int q : qubits)
    if (q < 0 || q >= counts.num_qubits)
      throw std::invalid_argument("marginal_counts: qubit index out of range");
  Counts out;
  out.num_qubits = static_cast<int>(qubits.size());
  out.shots = counts.shots;
  for (const auto& [bits, c] : counts.histogram) {
    std::string key(qubits.size(), '0');
    for (std::size_t i = 0; i < qubits.size(); ++i)
      key[i] = bits[static_cast<std::size_t>(counts.num_qubits - 1 - qubits[i])];
    out.histogram[key] += c;
  }
  return out;
}

}  // namespace nuqsim

#endif  // NUQSIM_QSIM_HPP
