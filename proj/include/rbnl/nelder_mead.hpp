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
#include <cstddef>
#include <numeric>

namespace rbnl {

struct NelderMeadOptions {
  int max_iterations = 200;
  /// Stop once the spread of simplex values drops to this.
  double value_tolerance = 1e-8;
};

template <std::size_t N>
struct NelderMeadResult {
  std::array<double, N> x{};
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

/**
 * Downhill simplex minimization with the standard coefficients
 * (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
 *
 * The initial simplex is `start` plus `start + steps[i] e_i`. The returned
 * value is never worse than f(start).
 */
template <std::size_t N, class F>
NelderMeadResult<N> nelder_mead_minimize(F&& f, const std::array<double, N>& start,
                                         const std::array<double, N>& steps,
                                         const NelderMeadOptions& opt = {}) {
  using Point = std::array<double, N>;
  std::array<Point, N + 1> pts;
  std::array<double, N + 1> vals;
  pts[0] = start;
  vals[0] = f(start);
  for (std::size_t i = 0; i < N; ++i) {
    pts[i + 1] = start;
    pts[i + 1][i] += steps[i];
    vals[i + 1] = f(pts[i + 1]);
  }

  std::array<std::size_t, N + 1> order;
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    std::array<Point, N + 1> p2;
    std::array<double, N + 1> v2;
    for (std::size_t i = 0; i <= N; ++i) {
      p2[i] = pts[order[i]];
      v2[i] = vals[order[i]];
    }
    pts = p2;
    vals = v2;
  };
  auto along = [](const Point& from, const Point& to, double t) {
    Point out;
    for (std::size_t i = 0; i < N; ++i) out[i] = from[i] + t * (to[i] - from[i]);
    return out;
  };

  NelderMeadResult<N> res;
  sort_simplex();
  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    if (vals[N] - vals[0] <= opt.value_tolerance) {
      res.converged = true;
      break;
    }
    Point centroid{};
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t i = 0; i < N; ++i) centroid[i] += pts[k][i] / static_cast<double>(N);

    const Point reflected = along(centroid, pts[N], -1.0);
    const double fr = f(reflected);
    if (fr < vals[0]) {
      const Point expanded = along(centroid, pts[N], -2.0);
      const double fe = f(expanded);
      if (fe < fr) {
        pts[N] = expanded;
        vals[N] = fe;
      } else {
        pts[N] = reflected;
        vals[N] = fr;
      }
    } else if (fr < vals[N - 1]) {
      pts[N] = reflected;
      vals[N] = fr;
    } else {
      const bool outside = fr < vals[N];
      const Point contracted = along(centroid, outside ? reflected : pts[N], 0.5);
      const double fc = f(contracted);
      if (fc < std::min(fr, vals[N])) {
        pts[N] = contracted;
        vals[N] = fc;
      } else {
        for (std::size_t k = 1; k <= N; ++k) {
          pts[k] = along(pts[0], pts[k], 0.5);
          vals[k] = f(pts[k]);
        }
      }
    }
    sort_simplex();
  }
  res.x = pts[0];
  res.value = vals[0];
  res.iterations = it;
  if (!res.converged) res.converged = vals[N] - vals[0] <= opt.value_tolerance;
  return res;
}

}  // namespace rbnl
