// Copyright 2026 The rbnl Authors
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

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rbnl/errors.hpp"

namespace rbnl {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Absolute tolerance for Hermiticity, trace and positivity checks.
inline constexpr double kStateTolerance = 1e-10;
/// Eigenvalues below this are treated as exact zeros inside entropies.
inline constexpr double kEntropyClip = 1e-12;

/// Which factor of a bipartite Hilbert space H_A (x) H_B.
enum class Site { A, B };

inline Site other(Site s) { return s == Site::A ? Site::B : Site::A; }

inline const char* to_string(Site s) { return s == Site::A ? "A" : "B"; }

/// Local dimensions of a bipartite system; A is the slow (left) tensor factor.
struct Dims {
  int a = 1;
  int b = 1;

  int total() const { return a * b; }
  int of(Site s) const { return s == Site::A ? a : b; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

/// Largest |m_ij - conj(m_ji)|.
inline double hermitian_deviation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/**
 * Kronecker product a (x) b.
 *
 * Entry (i*dim_b + k, j*dim_b + l) is a(i,j) * b(k,l), so the left factor
 * indexes the slow digit of the composite basis |ik>.
 */
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols()) {
    throw DomainError("square", "tensor() expects square factors");
  }
  const Eigen::Index na = a.rows();
  const Eigen::Index nb = b.rows();
  ComplexMatrix out(na * nb, na * nb);
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = a(i, j) * b;
    }
  }
  return out;
}

/// Kronecker product of column vectors, same index convention as tensor().
inline ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

/// Reduced matrix of the subsystem `keep`, tracing out the other factor.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, Dims dims, Site keep) {
  if (m.rows() != m.cols() || dims.a < 1 || dims.b < 1 || dims.total() != m.rows()) {
    throw DomainError("dims", "bipartite dimensions " + std::to_string(dims.a) + "x" +
                                  std::to_string(dims.b) + " do not match a " +
                                  std::to_string(m.rows()) + "x" +
                                  std::to_string(m.cols()) + " matrix");
  }
  const int da = dims.a;
  const int db = dims.b;
  if (keep == Site::A) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int k = 0; k < db; ++k)
    for (int l = 0; l < db; ++l)
      for (int i = 0; i < da; ++i) out(k, l) += m(i * db + k, i * db + l);
  return out;
}

/**
 * Spectral decomposition of a Hermitian matrix.
 *
 * Eigenvalues ascend; column k of `eigenvectors` belongs to eigenvalues[k].
 */
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const {
    const Eigen::Index n = eigenvectors.rows();
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
      const auto e = eigenvectors.col(static_cast<Eigen::Index>(k));
      out += eigenvalues[k] * (e * e.adjoint());
    }
    return out;
  }
};

inline void require_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DomainError("square", "matrix is " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()));
  }
  const double dev = hermitian_deviation(m);
  if (!(dev <= kStateTolerance)) {
    throw DomainError("hermitian", "max |m - m^dagger| = " + std::to_string(dev));
  }
}

namespace detail {

// Rotates the phase so the first component of largest modulus is real positive.
inline void fix_phase(Eigen::Ref<ComplexVector> v) {
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > best_abs + 1e-12) {
      best_abs = a;
      best = i;
    }
  }
  if (best_abs > 0.0) v *= std::conj(v(best)) / best_abs;
}

// Replaces the columns [first, last) of `vecs`, which span one eigenspace, by
// the Gram-Schmidt sequence of canonical basis vectors projected into it.
inline void canonicalize_block(ComplexMatrix& vecs, Eigen::Index first, Eigen::Index last) {
  const Eigen::Index n = vecs.rows();
  const Eigen::Index k = last - first;
  const ComplexMatrix q = vecs.middleCols(first, k);
  const ComplexMatrix proj = q * q.adjoint();
  // Some canonical vector always keeps a residual of at least 1/sqrt(n).
  const double accept = 0.5 / std::sqrt(static_cast<double>(n));
  Eigen::Index filled = 0;
  for (Eigen::Index j = 0; j < n && filled < k; ++j) {
    ComplexVector w = proj.col(j);
    for (Eigen::Index p = 0; p < filled; ++p) {
      const auto prev = vecs.col(first + p);
      w -= prev.dot(w) * prev;
    }
    const double norm = w.norm();
    if (norm < accept) continue;
    vecs.col(first + filled) = w / norm;
    ++filled;
  }
}

}  // namespace detail

/**
 * Full eigen-decomposition of a Hermitian matrix.
 *
 * Degenerate eigenspaces are re-orthonormalized against the canonical basis
 * order and every eigenvector carries a fixed phase, so the output is a pure
 * function of the input.
 */
inline Spectrum hermitian_spectrum(const ComplexMatrix& m) {
  require_hermitian(m);
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw DomainError("eigensolver", "Hermitian eigensolver did not converge");
  }
  Spectrum out;
  const Eigen::VectorXd& values = solver.eigenvalues();
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  out.eigenvectors = solver.eigenvectors();

  const Eigen::Index n = values.size();
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && values(end) - values(end - 1) <= 1e-9 * scale) ++end;
    if (end - start > 1) {
      detail::canonicalize_block(out.eigenvectors, start, end);
    } else {
      detail::fix_phase(out.eigenvectors.col(start));
    }
    start = end;
  }
  return out;
}

/// Eigenvalues only, ascending.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  require_hermitian(m);
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

/// -sum p ln p with 0 ln 0 = 0; entries below kEntropyClip count as zero.
inline double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p > kEntropyClip) s -= p * std::log(p);
  }
  return s;
}

/**
 * Von Neumann entropy -Tr(rho ln rho) in nats.
 *
 * Throws DomainError("positive semidefinite") if an eigenvalue is below
 * -kStateTolerance.
 */
inline double von_neumann_entropy(const ComplexMatrix& rho) {
  const std::vector<double> ev = hermitian_eigenvalues(rho);
  if (!ev.empty() && ev.front() < -kStateTolerance) {
    throw DomainError("positive semidefinite",
                      "eigenvalue " + std::to_string(ev.front()) + " < 0");
  }
  return shannon_entropy(ev);
}

}  // namespace rbnl
