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

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rbnl/errors.hpp"
#include "rbnl/linalg.hpp"

namespace rbnl {

// Basis convention: |00>, |01>, |10>, |11> (A is the slow index); the
// singlet is (|01> - |10>)/sqrt(2).

/*******************************************************************************
 * Bloch vectors and Pauli matrices
 ******************************************************************************/

/** Unit vector in R^3 that labels the qubit observable u . sigma. */
class BlochVector {
 public:
  BlochVector(double x, double y, double z) : c_{x, y, z} {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!(std::abs(n - 1.0) <= 1e-12)) {
      throw DomainError("unit norm", "Bloch vector has norm " + std::to_string(n));
    }
  }

  /// Spherical angles; any real theta and phi are accepted.
  static BlochVector from_angles(double theta, double phi) {
    const double s = std::sin(theta);
    return normalized(s * std::cos(phi), s * std::sin(phi), std::cos(theta));
  }

  static BlochVector normalized(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw DomainError("unit norm", "cannot normalize a zero or non-finite vector");
    }
    return BlochVector(Unchecked{}, x / n, y / n, z / n);
  }

  static BlochVector normalized(const Eigen::Vector3d& v) {
    return normalized(v.x(), v.y(), v.z());
  }

  double x() const { return c_[0]; }
  double y() const { return c_[1]; }
  double z() const { return c_[2]; }
  const std::array<double, 3>& components() const { return c_; }
  Eigen::Vector3d vec() const { return {c_[0], c_[1], c_[2]}; }

  double dot(const BlochVector& o) const {
    return c_[0] * o.c_[0] + c_[1] * o.c_[1] + c_[2] * o.c_[2];
  }

  BlochVector operator-() const { return BlochVector(Unchecked{}, -c_[0], -c_[1], -c_[2]); }

 private:
  struct Unchecked {};
  BlochVector(Unchecked, double x, double y, double z) : c_{x, y, z} {}

  std::array<double, 3> c_;
};

inline const std::array<ComplexMatrix, 3>& pauli() {
  static const std::array<ComplexMatrix, 3> sigma = [] {
    const Complex i{0.0, 1.0};
    ComplexMatrix sx(2, 2), sy(2, 2), sz(2, 2);
    sx << 0.0, 1.0, 1.0, 0.0;
    sy << 0.0, -i, i, 0.0;
    sz << 1.0, 0.0, 0.0, -1.0;
    return std::array<ComplexMatrix, 3>{sx, sy, sz};
  }();
  return sigma;
}

/// u . sigma
inline ComplexMatrix pauli_dot(const BlochVector& u) {
  const auto& s = pauli();
  return u.x() * s[0] + u.y() * s[1] + u.z() * s[2];
}

/*******************************************************************************
 * States
 ******************************************************************************/

/**
 * Bipartite density matrix: Hermitian, unit trace, positive semidefinite,
 * all to within kStateTolerance, with dims.a * dims.b equal to the matrix size.
 *
 * A single-system state is represented with dims {d, 1}.
 */
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix m, Dims dims) : m_(std::move(m)), dims_(dims) { validate(); }

  /// Single-system state.
  static DensityMatrix local(ComplexMatrix m) {
    const int d = static_cast<int>(m.rows());
    return DensityMatrix(std::move(m), Dims{d, 1});
  }

  /// For results of trace-preserving completely positive maps applied to a
  /// validated state; skips the eigenvalue check.
  static DensityMatrix trusted(ComplexMatrix m, Dims dims) {
    DensityMatrix out(Trusted{}, std::move(m), dims);
    return out;
  }

  const ComplexMatrix& matrix() const { return m_; }
  Dims dims() const { return dims_; }
  int dim() const { return static_cast<int>(m_.rows()); }

  double purity() const { return (m_ * m_).trace().real(); }

 private:
  struct Trusted {};
  DensityMatrix(Trusted, ComplexMatrix m, Dims dims) : m_(std::move(m)), dims_(dims) {}

  void validate() const {
    if (m_.rows() != m_.cols()) {
      throw DomainError("square", "density matrix is " + std::to_string(m_.rows()) + "x" +
                                      std::to_string(m_.cols()));
    }
    if (dims_.a < 1 || dims_.b < 1 || dims_.total() != m_.rows()) {
      throw DomainError("dims", "d_A*d_B = " + std::to_string(dims_.a) + "*" +
                                    std::to_string(dims_.b) + " != " +
                                    std::to_string(m_.rows()));
    }
    if (!m_.allFinite()) throw DomainError("finite", "matrix has NaN or Inf entries");
    require_hermitian(m_);
    const double tr_err = std::abs(m_.trace() - Complex(1.0, 0.0));
    if (!(tr_err <= kStateTolerance)) {
      throw DomainError("unit trace", "|Tr(rho) - 1| = " + std::to_string(tr_err));
    }
    const std::vector<double> ev = hermitian_eigenvalues(m_);
    if (ev.front() < -kStateTolerance) {
      throw DomainError("positive semidefinite",
                        "smallest eigenvalue " + std::to_string(ev.front()));
    }
  }

  ComplexMatrix m_;
  Dims dims_;
};

/// Unit-norm state vector of a bipartite system.
class PureState {
 public:
  PureState(ComplexVector v, Dims dims) : v_(std::move(v)), dims_(dims) {
    if (dims_.a < 1 || dims_.b < 1 || dims_.total() != v_.size()) {
      throw DomainError("dims", "vector length " + std::to_string(v_.size()) +
                                    " does not match " + std::to_string(dims_.a) + "x" +
                                    std::to_string(dims_.b));
    }
    if (!v_.allFinite()) throw DomainError("finite", "state vector has NaN or Inf entries");
    const double n = v_.norm();
    if (!(std::abs(n - 1.0) <= kStateTolerance)) {
      throw DomainError("unit norm", "|psi| = " + std::to_string(n));
    }
  }

  const ComplexVector& vector() const { return v_; }
  Dims dims() const { return dims_; }

  DensityMatrix density() const {
    return DensityMatrix::trusted(v_ * v_.adjoint(), dims_);
  }

 private:
  ComplexVector v_;
  Dims dims_;
};

inline ComplexMatrix partial_trace(const DensityMatrix& rho, Site keep) {
  return partial_trace(rho.matrix(), rho.dims(), keep);
}

inline double von_neumann_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(rho.matrix());
}

/// rho_A (x) rho_B for single-system states.
inline DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::trusted(tensor(a.matrix(), b.matrix()), Dims{a.dim(), b.dim()});
}

/*******************************************************************************
 * Projective measurements
 ******************************************************************************/

/**
 * Projective observable A = sum_k label_k P_k.
 *
 * Projectors must be Hermitian, idempotent, mutually orthogonal and sum to
 * the identity. Dephasing only uses the projectors; labels serve the CHSH
 * correlators.
 */
class PVM {
 public:
  PVM(std::vector<ComplexMatrix> projectors, std::vector<double> labels)
      : p_(std::move(projectors)), labels_(std::move(labels)) {
    validate();
  }

  /// Rank-1 projectors onto the columns of `basis`, labelled 0, 1, 2, ...
  static PVM from_basis(const ComplexMatrix& basis) {
    std::vector<ComplexMatrix> ps;
    std::vector<double> labels;
    for (Eigen::Index k = 0; k < basis.cols(); ++k) {
      const auto c = basis.col(k);
      ps.emplace_back(c * c.adjoint());
      labels.push_back(static_cast<double>(k));
    }
    return PVM(std::move(ps), std::move(labels));
  }

  const std::vector<ComplexMatrix>& projectors() const { return p_; }
  const std::vector<double>& labels() const { return labels_; }
  int dim() const { return static_cast<int>(p_.front().rows()); }
  std::size_t size() const { return p_.size(); }

  /// sum_k label_k P_k
  ComplexMatrix observable() const {
    ComplexMatrix out = ComplexMatrix::Zero(dim(), dim());
    for (std::size_t k = 0; k < p_.size(); ++k) out += labels_[k] * p_[k];
    return out;
  }

 private:
  void validate() const {
    if (p_.empty()) throw DomainError("complete", "PVM has no projectors");
    if (labels_.size() != p_.size()) {
      throw DomainError("labels", "one label per projector is required");
    }
    const Eigen::Index n = p_.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (std::size_t i = 0; i < p_.size(); ++i) {
      const ComplexMatrix& p = p_[i];
      if (p.rows() != n || p.cols() != n) {
        throw DomainError("dims", "projectors have different dimensions");
      }
      if (!(hermitian_deviation(p) <= kStateTolerance)) {
        throw DomainError("hermitian", "projector " + std::to_string(i) + " is not Hermitian");
      }
      if (!(max_abs_diff(p * p, p) <= kStateTolerance)) {
        throw DomainError("idempotent", "projector " + std::to_string(i) + " has P^2 != P");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (!((p * p_[j]).cwiseAbs().maxCoeff() <= kStateTolerance)) {
          throw DomainError("orthogonal", "projectors " + std::to_string(j) + " and " +
                                              std::to_string(i) + " overlap");
        }
      }
      sum += p;
    }
    if (!(max_abs_diff(sum, ComplexMatrix::Identity(n, n)) <= kStateTolerance)) {
      throw DomainError("complete", "projectors do not sum to the identity");
    }
  }

  std::vector<ComplexMatrix> p_;
  std::vector<double> labels_;
};

/// Spectral projectors of u . sigma: (I + u.sigma)/2 labelled +1, (I - u.sigma)/2 labelled -1.
inline PVM bloch_pvm(const BlochVector& u) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  const ComplexMatrix us = pauli_dot(u);
  return PVM({0.5 * (id + us), 0.5 * (id - us)}, {1.0, -1.0});
}

/*******************************************************************************
 * Named states
 ******************************************************************************/

inline DensityMatrix werner(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw DomainError("mu range", "Werner weight must lie in [0, 1], got " + std::to_string(mu));
  }
  ComplexVector s = ComplexVector::Zero(4);
  s(1) = std::numbers::sqrt2 / 2.0;
  s(2) = -std::numbers::sqrt2 / 2.0;
  ComplexMatrix m = (1.0 - mu) / 4.0 * ComplexMatrix::Identity(4, 4) + mu * (s * s.adjoint());
  return DensityMatrix::trusted(std::move(m), Dims{2, 2});
}

inline PureState singlet() {
  ComplexVector s = ComplexVector::Zero(4);
  s(1) = std::numbers::sqrt2 / 2.0;
  s(2) = -std::numbers::sqrt2 / 2.0;
  return PureState(std::move(s), Dims{2, 2});
}

/// sum_i |ii> / sqrt(d)
inline PureState maximally_entangled(int d) {
  if (d < 1) throw DomainError("dims", "dimension must be positive");
  ComplexVector v = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) v(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return PureState(std::move(v), Dims{d, d});
}

/// (|00> + gamma|11> + |22>) / sqrt(2 + gamma^2)
inline PureState qutrit_family(double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw DomainError("gamma range", "gamma must be finite and >= 0, got " + std::to_string(gamma));
  }
  const double n = std::sqrt(2.0 + gamma * gamma);
  ComplexVector v = ComplexVector::Zero(9);
  v(0) = 1.0 / n;
  v(4) = gamma / n;
  v(8) = 1.0 / n;
  return PureState(std::move(v), Dims{3, 3});
}

/// Computational-basis product |i>|j>.
inline PureState basis_product(Dims dims, int i, int j) {
  ComplexVector v = ComplexVector::Zero(dims.total());
  v(i * dims.b + j) = 1.0;
  return PureState(std::move(v), dims);
}

/*******************************************************************************
 * Two-qubit Bloch representation
 ******************************************************************************/

/**
 * rho = (I + a.sigma (x) I + I (x) b.sigma + sum_ij t_ij sigma_i (x) sigma_j) / 4
 */
struct TwoQubitBloch {
  Eigen::Vector3d a;
  Eigen::Vector3d b;
  Eigen::Matrix3d t;
};

inline void require_two_qubits(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2}) {
    throw DomainError("dims", "expected a two-qubit state, got " +
                                  std::to_string(rho.dims().a) + "x" +
                                  std::to_string(rho.dims().b));
  }
}

inline TwoQubitBloch two_qubit_bloch(const DensityMatrix& rho) {
  require_two_qubits(rho);
  const auto& s = pauli();
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  TwoQubitBloch out;
  for (int i = 0; i < 3; ++i) {
    out.a(i) = (rho.matrix() * tensor(s[i], id)).trace().real();
    out.b(i) = (rho.matrix() * tensor(id, s[i])).trace().real();
    for (int j = 0; j < 3; ++j) {
      out.t(i, j) = (rho.matrix() * tensor(s[i], s[j])).trace().real();
    }
  }
  return out;
}

/*******************************************************************************
 * Random states
 ******************************************************************************/

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  return Rng(seq);
}

/// Vector of i.i.d. complex standard normals.
inline ComplexVector complex_normal(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = g(rng);
    const double im = g(rng);
    v(i) = Complex(re, im);
  }
  return v;
}

/// Unitarily invariant random pure state.
inline PureState random_pure(Dims dims, Rng& rng) {
  ComplexVector v = complex_normal(dims.total(), rng);
  v /= v.norm();
  return PureState(std::move(v), dims);
}

inline PureState random_pure(int d_a, int d_b, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_pure(Dims{d_a, d_b}, rng);
}

/// Normalized mixture of `rank` unnormalized complex-normal vectors.
inline DensityMatrix random_density(Dims dims, int rank, Rng& rng) {
  if (rank < 1 || rank > dims.total()) {
    throw DomainError("rank", "rank must lie in [1, " + std::to_string(dims.total()) + "]");
  }
  const Eigen::Index n = dims.total();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < rank; ++k) {
    const ComplexVector g = complex_normal(n, rng);
    m += g * g.adjoint();
  }
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix::trusted(std::move(m), dims);
}

inline DensityMatrix random_density(int d_a, int d_b, int rank, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_density(Dims{d_a, d_b}, rank, rng);
}

/// Haar-random unitary from the QR decomposition of a complex Ginibre matrix.
inline ComplexMatrix random_unitary(int d, Rng& rng) {
  ComplexMatrix g(d, d);
  for (int j = 0; j < d; ++j) g.col(j) = complex_normal(d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(d, d);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

/// Uniform point on the unit sphere.
inline BlochVector random_bloch(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double z = 2.0 * u(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * u(rng);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return BlochVector::normalized(s * std::cos(phi), s * std::sin(phi), z);
}

}  // namespace rbnl
