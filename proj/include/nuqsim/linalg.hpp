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

#ifndef NUQSIM_LINALG_HPP
#define NUQSIM_LINALG_HPP

// Dense complex linear algebra: matrices, Kronecker products, a Hermitian
// eigensolver, and matrix exponentials of the form exp(-i H t).
//
// The dimensions in play are tiny (at most a few thousand), so everything
// is a straightforward row-major dense implementation with no dependency
// beyond the standard library. The eigensolver is a cyclic complex Jacobi
// iteration: slower asymptotically than tridiagonalization but simple,
// unconditionally stable, and it returns orthonormal eigenvectors to
// near machine precision, which the propagator accuracy contract needs.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "nuqsim/tolerances.hpp"

namespace nuqsim {

using cplx = std::complex<double>;

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(size_check(rows, cols)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const cplx& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Mat dagger() const {
    Mat out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  cplx trace() const {
    cplx t = 0.0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Mat multiply: shape mismatch");
    Mat out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r) {
      for (int k = 0; k < a.cols_; ++k) {
        const cplx ark = a(r, k);
        if (ark == cplx{}) continue;
        for (int c = 0; c < b.cols_; ++c) out(r, c) += ark * b(k, c);
      }
    }
    return out;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    check_same_shape(a, b, "add");
    Mat out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    check_same_shape(a, b, "subtract");
    Mat out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
  }

  friend Mat operator*(cplx s, const Mat& m) {
    Mat out = m;
    for (auto& v : out.data_) v *= s;
    return out;
  }

  std::vector<cplx> apply(const std::vector<cplx>& v) const {
    if (static_cast<int>(v.size()) != cols_)
      throw std::invalid_argument("Mat apply: vector length mismatch");
    std::vector<cplx> out(rows_, cplx{});
    for (int r = 0; r < rows_; ++r) {
      cplx acc = 0.0;
      for (int c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
      out[r] = acc;
    }
    return out;
  }

 private:
  static std::size_t size_check(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimension");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }

  static void check_same_shape(const Mat& a, const Mat& b, const char* what) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument(std::string("Mat ") + what + ": shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> data_;
};

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ar = 0; ar < a.rows(); ++ar)
    for (int ac = 0; ac < a.cols(); ++ac) {
      const cplx f = a(ar, ac);
      if (f == cplx{}) continue;
      for (int br = 0; br < b.rows(); ++br)
        for (int bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = f * b(br, bc);
    }
  return out;
}

inline double max_abs(const Mat& m) {
  double best = 0.0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) best = std::max(best, std::abs(m(r, c)));
  return best;
}

inline double frobenius_norm(const Mat& m) {
  double acc = 0.0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) acc += std::norm(m(r, c));
  return std::sqrt(acc);
}

inline bool is_hermitian(const Mat& m, double tol = tol::kHermitian) {
  if (m.rows() != m.cols()) return false;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = r; c < m.cols(); ++c)
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
  return true;
}

inline bool is_unitary(const Mat& m, double tol = tol::kUnitary) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m.dagger() * m - Mat::identity(m.rows())) <= tol;
}

struct Eigensystem {
  std::vector<double> values;  // ascending
  Mat vectors;                 // column k is the eigenvector of values[k]
};

// Cyclic complex Jacobi eigensolver for Hermitian matrices. Each rotation
// zeroes one off-diagonal pair (p, q) with the unitary
//
//   G = [[ c, -s e^{i phi} ], [ s e^{-i phi}, c ]],  phi = arg(A_pq),
//
// where tan(2 theta) = 2 |A_pq| / (A_pp - A_qq). Sweeps repeat until the
// off-diagonal Frobenius mass falls below kJacobiOffDiag relative to the
// input norm.
inline Eigensystem eig_hermitian(const Mat& h) {
  if (!is_hermitian(h)) throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
  const int n = h.rows();
  Mat a = h;
  Mat v = Mat::identity(n);

  auto off_diag_norm = [&]() {
    double acc = 0.0;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (r != c) acc += std::norm(a(r, c));
    return std::sqrt(acc);
  };

  const double scale = std::max(frobenius_norm(h), 1.0);
  int sweeps = 0;
  while (off_diag_norm() > tol::kJacobiOffDiag * scale) {
    if (++sweeps > tol::kJacobiMaxSweeps)
      throw std::runtime_error("eig_hermitian: Jacobi iteration failed to converge");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx w = a(p, q);
        const double aw = std::abs(w);
        if (aw <= tol::kJacobiOffDiag * scale * 1e-2) continue;
        const cplx phase = w / aw;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (app - aqq) / (2.0 * aw);
        // Smaller-angle root of t^2 + 2 tau t - 1 = 0.
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx gpq = -s * phase;
        const cplx gqp = s * std::conj(phase);
        // A <- G^dagger A G, applied as column then row updates.
        for (int k = 0; k < n; ++k) {
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp + gqp * akq;
          a(k, q) = gpq * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (int k = 0; k < n; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp + gqp * vkq;
          v(k, q) = gpq * vkp + c * vkq;
        }
      }
    }
  }

  Eigensystem out;
  out.values.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::sort(order.begin(), order.end(),
            [&](int lhs, int rhs) { return diag[lhs] < diag[rhs]; });
  out.vectors = Mat(n, n);
  for (int c = 0; c < n; ++c) {
    out.values[c] = diag[order[c]];
    for (int r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

// exp(-i H t) for Hermitian H, via eigendecomposition.
inline Mat expm_hermitian(const Mat& h, double t) {
  const Eigensystem es = eig_hermitian(h);
  const int n = h.rows();
  Mat phases(n, n);
  for (int i = 0; i < n; ++i)
    phases(i, i) = std::exp(cplx(0.0, -es.values[i] * t));
  return es.vectors * phases * es.vectors.dagger();
}

inline std::vector<cplx> propagate(const Eigensystem& es, const std::vector<cplx>& v,
                                   double t) {
  const int n = es.vectors.rows();
  std::vector<cplx> modal = es.vectors.dagger().apply(v);
  for (int i = 0; i < n; ++i) modal[i] *= std::exp(cplx(0.0, -es.values[i] * t));
  return es.vectors.apply(modal);
}

// Frobenius distance between U and V minimized over a global phase on V.
// The optimizing phase is e^{i arg tr(U^dagger V)}; the distance is then
// evaluated as an explicit difference norm. The algebraically equivalent
// sqrt(2 d - 2 |tr|) form loses half the significant digits to
// cancellation near zero and cannot certify distances below ~1e-7.
inline double distance_up_to_global_phase(const Mat& u, const Mat& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw std::invalid_argument("distance_up_to_global_phase: shape mismatch");
  const cplx overlap = (u.dagger() * v).trace();
  cplx phase = 1.0;
  if (std::abs(overlap) > 0.0) phase = std::conj(overlap) / std::abs(overlap);
  return frobenius_norm(phase * v - u);
}

}  // namespace nuqsim

#endif  // NUQSIM_LINALG_HPP
