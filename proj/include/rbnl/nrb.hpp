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
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rbnl/errors.hpp"
#include "rbnl/linalg.hpp"
#include "rbnl/realism.hpp"
#include "rbnl/sphere_search.hpp"
#include "rbnl/states.hpp"

namespace rbnl {

/// Realism-based nonlocality of a state together with the maximizing context.
struct NrbResult {
  double value = 0.0;  // nats
  BlochVector u{0.0, 0.0, 1.0};
  BlochVector v{0.0, 0.0, 1.0};
  double eta = 1.0;  // |u . v|
};

/*******************************************************************************
 * Pure states
 ******************************************************************************/

/**
 * |psi> = sum_i sqrt(xi_i) |alpha_i>|beta_i>.
 *
 * coefficients holds min(dA, dB) weights in descending order; column i of
 * a_basis / b_basis is |alpha_i> / |beta_i>. Both bases are complete.
 */
struct SchmidtDecomposition {
  std::vector<double> coefficients;
  ComplexMatrix a_basis;
  ComplexMatrix b_basis;

  ComplexVector reconstruct() const {
    ComplexVector out = ComplexVector::Zero(a_basis.rows() * b_basis.rows());
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      const auto k = static_cast<Eigen::Index>(i);
      out += std::sqrt(coefficients[i]) *
             tensor(ComplexVector(a_basis.col(k)), ComplexVector(b_basis.col(k)));
    }
    return out;
  }
};

inline SchmidtDecomposition schmidt(const PureState& psi) {
  const Dims d = psi.dims();
  const ComplexVector& v = psi.vector();
  const ComplexMatrix rho_a = partial_trace(ComplexMatrix(v * v.adjoint()), d, Site::A);
  const Spectrum spec = hermitian_spectrum(rho_a);

  SchmidtDecomposition out;
  out.a_basis = spec.eigenvectors.rowwise().reverse();
  const int r = std::min(d.a, d.b);
  for (int i = 0; i < r; ++i) {
    out.coefficients.push_back(std::max(0.0, spec.eigenvalues[static_cast<std::size_t>(d.a - 1 - i)]));
  }

  // beta_i = (<alpha_i| (x) I)|psi> / sqrt(xi_i); the rest is completed
  // from the canonical basis.
  out.b_basis = ComplexMatrix::Zero(d.b, d.b);
  int filled = 0;
  for (int i = 0; i < r && out.coefficients[static_cast<std::size_t>(i)] > 1e-14; ++i) {
    ComplexVector w = ComplexVector::Zero(d.b);
    for (int j = 0; j < d.a; ++j) {
      w += std::conj(out.a_basis(j, i)) * v.segment(j * d.b, d.b);
    }
    for (int p = 0; p < filled; ++p) w -= out.b_basis.col(p).dot(w) * out.b_basis.col(p);
    out.b_basis.col(filled++) = w / w.norm();
  }
  const double accept = 0.5 / std::sqrt(static_cast<double>(d.b));
  for (int e = 0; e < d.b && filled < d.b; ++e) {
    ComplexVector w = ComplexVector::Unit(d.b, e);
    for (int p = 0; p < filled; ++p) w -= out.b_basis.col(p).dot(w) * out.b_basis.col(p);
    if (w.norm() < accept) continue;
    out.b_basis.col(filled++) = w / w.norm();
  }
  return out;
}

/// -sum xi ln xi over the Schmidt weights.
inline double entanglement_entropy(const PureState& psi) {
  return shannon_entropy(schmidt(psi).coefficients);
}

/// Pure-state quantifier and the Schmidt observables that attain it.
struct PureNrbResult {
  double value = 0.0;
  SchmidtDecomposition schmidt;
  PVM alpha;
  PVM beta;
  /// Bloch vectors of the leading Schmidt vectors (two-qubit states only).
  std::optional<BlochVector> u;
  std::optional<BlochVector> v;
};

namespace detail {

inline BlochVector bloch_of(const ComplexVector& ket) {
  const auto& s = pauli();
  double r[3];
  for (int i = 0; i < 3; ++i) r[i] = ket.dot(s[static_cast<std::size_t>(i)] * ket).real();
  return BlochVector::normalized(r[0], r[1], r[2]);
}

}  // namespace detail

/**
 * For pure states the maximum over observable pairs equals the entanglement
 * entropy and is reached by the Schmidt observables.
 */
inline PureNrbResult nrb_pure(const PureState& psi) {
  SchmidtDecomposition sd = schmidt(psi);
  const double e = shannon_entropy(sd.coefficients);
  PVM alpha = PVM::from_basis(sd.a_basis);
  PVM beta = PVM::from_basis(sd.b_basis);
  PureNrbResult out{e, std::move(sd), std::move(alpha), std::move(beta), std::nullopt, std::nullopt};
  if (psi.dims() == Dims{2, 2}) {
    out.u = detail::bloch_of(out.schmidt.a_basis.col(0));
    out.v = detail::bloch_of(out.schmidt.b_basis.col(0));
  }
  return out;
}

/*******************************************************************************
 * Two-qubit states
 ******************************************************************************/

/**
 * Delta-irreality of the context (u . sigma, v . sigma) evaluated from the
 * Bloch representation of rho.
 *
 * With rank-1 qubit projectors every dephased state splits into 2x2 blocks:
 *   Phi_A: (1/4)[(1 + s u.a) I + (b + s T^T u) . sigma],  s = +-1
 *   Phi_B: (1/4)[(1 + s v.b) I + (a + s T v) . sigma]
 *   Phi_AB: diag (1 + s u.a + t v.b + s t u^T T v) / 4
 * so the entropies need no eigensolver.
 */
class TwoQubitContextEvaluator {
 public:
  explicit TwoQubitContextEvaluator(const DensityMatrix& rho)
      : bloch_(two_qubit_bloch(rho)), entropy_(von_neumann_entropy(rho)) {}

  double operator()(const Eigen::Vector3d& u, const Eigen::Vector3d& v) const {
    const double ua = u.dot(bloch_.a);
    const double vb = v.dot(bloch_.b);
    const Eigen::Vector3d ttu = bloch_.t.transpose() * u;
    const Eigen::Vector3d tv = bloch_.t * v;
    const double utv = u.dot(tv);

    const double rap = (bloch_.b + ttu).norm();
    const double ram = (bloch_.b - ttu).norm();
    const std::array<double, 4> phi_a{(1 + ua + rap) / 4, (1 + ua - rap) / 4,
                                      (1 - ua + ram) / 4, (1 - ua - ram) / 4};
    const double rbp = (bloch_.a + tv).norm();
    const double rbm = (bloch_.a - tv).norm();
    const std::array<double, 4> phi_b{(1 + vb + rbp) / 4, (1 + vb - rbp) / 4,
                                      (1 - vb + rbm) / 4, (1 - vb - rbm) / 4};
    const std::array<double, 4> phi_ab{(1 + ua + vb + utv) / 4, (1 + ua - vb - utv) / 4,
                                       (1 - ua + vb - utv) / 4, (1 - ua - vb + utv) / 4};
    return shannon_entropy(phi_a) + shannon_entropy(phi_b) - shannon_entropy(phi_ab) - entropy_;
  }

  double operator()(const BlochVector& u, const BlochVector& v) const {
    return (*this)(u.vec(), v.vec());
  }

 private:
  TwoQubitBloch bloch_;
  double entropy_;
};

/**
 * Maximum of Delta-irreality over qubit observables u . sigma and v . sigma.
 *
 * Grid search over both Bloch spheres followed by simplex refinement; see
 * OptimizerConfig. Only rank-1 projective observables are searched.
 */
inline NrbResult nrb_two_qubit(const DensityMatrix& rho, const OptimizerConfig& cfg = {}) {
  require_two_qubits(rho);
  const TwoQubitContextEvaluator eval(rho);
  const SpherePairMax best = maximize_sphere_pair(
      [&](const Eigen::Vector3d& u, const Eigen::Vector3d& v) { return eval(u, v); }, cfg);
  return {best.value, best.u, best.v, std::min(1.0, std::abs(best.u.dot(best.v)))};
}

namespace detail {

inline void require_mu(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw DomainError("mu range", "mu must lie in [0, 1], got " + std::to_string(mu));
  }
}

}  // namespace detail

/// h(x) = (1 + x) ln(1 + x), continuous at x = -1.
inline double werner_h(double x) {
  const double y = 1.0 + x;
  return y > 0.0 ? y * std::log(y) : 0.0;
}

/// Closed form for the Werner family: [h(3 mu) + h(-mu) - 2 h(mu)] / 4.
inline double nrb_werner_closed_form(double mu) {
  detail::require_mu(mu);
  return 0.25 * (werner_h(3.0 * mu) + werner_h(-mu) - 2.0 * werner_h(mu));
}

/// Analytic spectra (ascending) of the dephased Werner states.
struct DephasedSpectra {
  std::array<double, 4> phi_a;
  std::array<double, 4> phi_b;
  std::array<double, 4> phi_ab;
};

inline DephasedSpectra werner_dephased_spectra(double mu, const BlochVector& u,
                                               const BlochVector& v) {
  detail::require_mu(mu);
  const double eta = std::min(1.0, std::abs(u.dot(v)));
  const double lo = (1.0 - mu) / 4.0;
  const double hi = (1.0 + mu) / 4.0;
  const double lo_ab = (1.0 - mu * eta) / 4.0;
  const double hi_ab = (1.0 + mu * eta) / 4.0;
  return {{lo, lo, hi, hi}, {lo, lo, hi, hi}, {lo_ab, lo_ab, hi_ab, hi_ab}};
}

}  // namespace rbnl
