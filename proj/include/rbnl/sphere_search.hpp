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
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rbnl/errors.hpp"
#include "rbnl/nelder_mead.hpp"
#include "rbnl/states.hpp"

namespace rbnl {

/**
 * Settings for maximizing a function of two unit vectors.
 *
 * The search evaluates a (theta, phi) grid on each sphere, then refines the
 * best `restarts` grid pairs with Nelder-Mead in the four angles. `seed`
 * picks the orientation of each initial simplex.
 */
struct OptimizerConfig {
  int theta_points = 12;  // over [0, pi], endpoints included
  int phi_points = 24;    // over [0, 2 pi)
  int iterations = 200;   // per simplex run
  int restarts = 8;
  double tolerance = 1e-8;
  std::uint64_t seed = 0;

  void validate() const {
    if (theta_points < 2) throw DomainError("optimizer config", "theta_points must be >= 2");
    if (phi_points < 1) throw DomainError("optimizer config", "phi_points must be >= 1");
    if (iterations < 1) throw DomainError("optimizer config", "iterations must be >= 1");
    if (restarts < 1) throw DomainError("optimizer config", "restarts must be >= 1");
    if (!(tolerance > 0.0)) throw DomainError("optimizer config", "tolerance must be > 0");
  }
};

/// Maximizer found by maximize_sphere_pair(); angles are (theta_u, phi_u, theta_v, phi_v).
struct SpherePairMax {
  double value = 0.0;
  std::array<double, 4> angles{};
  BlochVector u{0.0, 0.0, 1.0};
  BlochVector v{0.0, 0.0, 1.0};
  double grid_value = 0.0;
};

inline Eigen::Vector3d unit_from_angles(double theta, double phi) {
  const double s = std::sin(theta);
  return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

/**
 * Maximizes f(u, v) over pairs of unit vectors.
 *
 * Deterministic: grid pairs are ranked by value with ties broken by
 * lexicographic (theta_u, phi_u, theta_v, phi_v) grid index, and the result
 * is never below the best grid value.
 */
template <class F>
SpherePairMax maximize_sphere_pair(F&& f, const OptimizerConfig& cfg) {
  cfg.validate();
  const double dtheta = std::numbers::pi / (cfg.theta_points - 1);
  const double dphi = 2.0 * std::numbers::pi / cfg.phi_points;

  struct Node {
    double theta, phi;
    Eigen::Vector3d dir;
  };
  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>(cfg.theta_points * cfg.phi_points));
  for (int i = 0; i < cfg.theta_points; ++i) {
    for (int j = 0; j < cfg.phi_points; ++j) {
      const double th = i * dtheta;
      const double ph = j * dphi;
      nodes.push_back({th, ph, unit_from_angles(th, ph)});
    }
  }

  const std::size_t m = nodes.size();
  std::vector<double> grid(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) grid[a * m + b] = f(nodes[a].dir, nodes[b].dir);

  std::vector<std::size_t> rank(grid.size());
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  const std::size_t starts = std::min<std::size_t>(static_cast<std::size_t>(cfg.restarts), rank.size());
  std::partial_sort(rank.begin(), rank.begin() + static_cast<std::ptrdiff_t>(starts), rank.end(),
                    [&](std::size_t x, std::size_t y) {
                      return grid[x] > grid[y] || (grid[x] == grid[y] && x < y);
                    });

  auto objective = [&](const std::array<double, 4>& x) {
    return -f(unit_from_angles(x[0], x[1]), unit_from_angles(x[2], x[3]));
  };

  SpherePairMax best;
  {
    const Node& nu = nodes[rank[0] / m];
    const Node& nv = nodes[rank[0] % m];
    best.value = grid[rank[0]];
    best.grid_value = best.value;
    best.angles = {nu.theta, nu.phi, nv.theta, nv.phi};
  }

  Rng rng = make_rng(cfg.seed);
  const NelderMeadOptions nm{cfg.iterations, cfg.tolerance};
  for (std::size_t r = 0; r < starts; ++r) {
    const Node& nu = nodes[rank[r] / m];
    const Node& nv = nodes[rank[r] % m];
    std::array<double, 4> x{nu.theta, nu.phi, nv.theta, nv.phi};
    std::array<double, 4> step{0.5 * dtheta, 0.5 * dphi, 0.5 * dtheta, 0.5 * dphi};
    for (double& s : step) {
      if (rng() & 1u) s = -s;
    }
    double value = -objective(x);
    // Polish with shrinking simplices until a pass stops paying off.
    for (int pass = 0; pass < 6; ++pass) {
      const auto res = nelder_mead_minimize<4>(objective, x, step, nm);
      const double gained = -res.value - value;
      if (-res.value > value) {
        x = res.x;
        value = -res.value;
      }
      if (pass > 0 && gained <= cfg.tolerance) break;
      for (double& s : step) s *= 0.1;
    }
    if (value > best.value) {
      best.value = value;
      best.angles = x;
    }
  }
  best.u = BlochVector::from_angles(best.angles[0], best.angles[1]);
  best.v = BlochVector::from_angles(best.angles[2], best.angles[3]);
  return best;
}

}  // namespace rbnl
