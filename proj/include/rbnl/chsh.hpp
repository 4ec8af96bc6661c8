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
#include <cstdint>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "rbnl/errors.hpp"
#include "rbnl/linalg.hpp"
#include "rbnl/sphere_search.hpp"
#include "rbnl/states.hpp"

namespace rbnl {

/// CHSH context: observables u1, u2 on A and v1, v2 on B.
struct ChshSettings {
  BlochVector u1;
  BlochVector u2;
  BlochVector v1;
  BlochVector v2;
};

/// Tr[rho (u . sigma (x) v . sigma)]
inline double correlator(const DensityMatrix& rho, const BlochVector& u, const BlochVector& v) {
  require_two_qubits(rho);
  return (rho.matrix() * tensor(pauli_dot(u), pauli_dot(v))).trace().real();
}

/// |A1B1 + A1B2 + A2B1 - A2B2|; local models obey <= 2.
inline double chsh_value(const DensityMatrix& rho, const ChshSettings& s) {
  return std::abs(correlator(rho, s.u1, s.v1) + correlator(rho, s.u1, s.v2) +
                  correlator(rho, s.u2, s.v1) - correlator(rho, s.u2, s.v2));
}

/// Largest CHSH value found and the settings that produce it.
struct MaxChsh {
  double value = 0.0;
  ChshSettings settings;
};

/**
 * Maximizes the CHSH value over all settings.
 *
 * For fixed v1, v2 the optimal A-side vectors are T(v1 + v2) and T(v1 - v2)
 * normalized, giving |T(v1 + v2)| + |T(v1 - v2)|; only the B-side pair is
 * searched, with the same grid + simplex strategy as the Delta-irreality
 * optimizer.
 */
inline MaxChsh max_chsh(const DensityMatrix& rho, const OptimizerConfig& cfg = {}) {
  const Eigen::Matrix3d t = two_qubit_bloch(rho).t;
  const SpherePairMax best = maximize_sphere_pair(
      [&](const Eigen::Vector3d& v1, const Eigen::Vector3d& v2) {
        return (t * (v1 + v2)).norm() + (t * (v1 - v2)).norm();
      },
      cfg);
  auto direction = [](const Eigen::Vector3d& w) {
    return w.norm() > 1e-300 ? BlochVector::normalized(w) : BlochVector(0.0, 0.0, 1.0);
  };
  const Eigen::Vector3d v1 = best.u.vec();
  const Eigen::Vector3d v2 = best.v.vec();
  return {best.value, {direction(t * (v1 + v2)), direction(t * (v1 - v2)), best.u, best.v}};
}

namespace detail {

inline void require_unit_interval(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw DomainError("mu range", "mu must lie in [0, 1], got " + std::to_string(mu));
  }
}

}  // namespace detail

/// max[0, mu sqrt(2) - 1]
inline double nmax_werner(double mu) {
  detail::require_unit_interval(mu);
  return std::max(0.0, mu * std::numbers::sqrt2 - 1.0);
}

/// Violations below this are rounding noise and reported as exactly zero.
inline constexpr double kNmaxFloor = 1e-12;

/// max[0, B_max / 2 - 1]; for Werner states this is mu sqrt(2) - 1.
inline double nmax_numeric(const DensityMatrix& rho, const OptimizerConfig& cfg = {}) {
  const double excess = max_chsh(rho, cfg).value / 2.0 - 1.0;
  return excess > kNmaxFloor ? excess : 0.0;
}

/*******************************************************************************
 * Volume of violation for the Werner family
 ******************************************************************************/

/// Point of the reduced (x, y, z) setting space, x, y in [-1, 1], z in [0, 1].
struct ReducedPoint {
  double x;
  double y;
  double z;

  ReducedPoint(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
    if (!(x >= -1.0 && x <= 1.0 && y >= -1.0 && y <= 1.0 && z >= 0.0 && z <= 1.0)) {
      throw DomainError("reduced point range", "need x, y in [-1, 1] and z in [0, 1]");
    }
  }
};

/// |x sqrt(z) + y sqrt(1 - z)|; a Werner state violates CHSH where mu * bfrak > 1.
inline double bfrak(const ReducedPoint& p) {
  return std::abs(p.x * std::sqrt(p.z) + p.y * std::sqrt(1.0 - p.z));
}

/**
 * Closed form for the Werner volume of violation:
 *   (8/3)(mu + 1/mu) g + (2/mu) ln[4 mu^2 (1 - g) - 1],  g = sqrt(1 - 1/(2 mu^2)),
 * and 0 for mu <= 1/sqrt(2).
 *
 * Note: this expression does not agree with nvol_quadrature() or nvol_mc(),
 * which both measure the violating fraction of the (x, y, z) box directly
 * (at mu = 1 they give (pi - 3)/2 ~ 0.0708, the closed form gives ~0.2457).
 */
inline double nvol_analytic(double mu) {
  detail::require_unit_interval(mu);
  if (mu <= std::numbers::sqrt2 / 2.0) return 0.0;
  const double g = std::sqrt(1.0 - 1.0 / (2.0 * mu * mu));
  const double value =
      (8.0 / 3.0) * (mu + 1.0 / mu) * g + (2.0 / mu) * std::log(4.0 * mu * mu * (1.0 - g) - 1.0);
  return std::max(0.0, value);
}

/**
 * Midpoint-rule estimate of the fraction of [-1,1]^2 x [0,1] where
 * mu * bfrak(x, y, z) > 1, with `resolution` cells per axis.
 */
inline double nvol_quadrature(double mu, int resolution) {
  detail::require_unit_interval(mu);
  if (resolution < 100) {
    throw DomainError("resolution", "quadrature needs at least 100 cells per axis");
  }
  const int n = resolution;
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = -1.0 + (2.0 * i + 1.0) / n;

  std::uint64_t inside = 0;
  for (int k = 0; k < n; ++k) {
    const double z = (k + 0.5) / n;
    const double a = mu * std::sqrt(z);
    const double b = mu * std::sqrt(1.0 - z);
    for (int j = 0; j < n; ++j) {
      const double c = b * xs[static_cast<std::size_t>(j)];
      std::uint64_t row = 0;
      for (int i = 0; i < n; ++i) row += std::abs(a * xs[static_cast<std::size_t>(i)] + c) > 1.0;
      inside += row;
    }
  }
  const double cells = static_cast<double>(n) * n * n;
  return static_cast<double>(inside) / cells;
}

}  // namespace rbnl
