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

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rbnl/chsh.hpp"
#include "rbnl/errors.hpp"
#include "rbnl/sampling.hpp"

namespace rbnl {

/**
 * Sampling space for the Monte Carlo volume of violation.
 *
 * Angles: four independent sphere-uniform setting vectors, counted where
 *   mu |u1.(v1 + v2) + u2.(v1 - v2)| > 2.
 * Xyz: uniform points of [-1,1]^2 x [0,1], counted where mu * bfrak > 1.
 * Under sphere-uniform settings (x, y, z) is uniform on the box, so both
 * estimate the same fraction.
 */
enum class McMethod { Angles, Xyz };

inline std::string_view to_string(McMethod m) { return m == McMethod::Angles ? "angles" : "xyz"; }

inline std::optional<McMethod> parse_mc_method(std::string_view s) {
  if (s == "angles") return McMethod::Angles;
  if (s == "xyz") return McMethod::Xyz;
  return std::nullopt;
}

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = std::uint64_t{1} << 16;
  McMethod method = McMethod::Angles;
};

struct McEstimate {
  double fraction = 0.0;
  double std_error = 0.0;  // sqrt(f (1 - f) / n)
  std::uint64_t violations = 0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo volume of violation of the Werner state with weight mu.
inline McEstimate nvol_mc(double mu, const McConfig& cfg, unsigned workers = 1) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw DomainError("mu range", "mu must lie in [0, 1], got " + std::to_string(mu));
  }
  if (cfg.samples == 0) throw DomainError("samples", "sample count must be >= 1");
  if (cfg.chunk_size == 0) throw DomainError("chunk size", "chunk size must be >= 1");

  auto count_angles = [mu](std::uint64_t, StreamRng& rng, std::uint64_t len) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < len; ++i) {
      const auto u1 = sphere_point(rng);
      const auto u2 = sphere_point(rng);
      const auto v1 = sphere_point(rng);
      const auto v2 = sphere_point(rng);
      double s = 0.0;
      for (int c = 0; c < 3; ++c) s += u1[c] * (v1[c] + v2[c]) + u2[c] * (v1[c] - v2[c]);
      hits += mu * std::abs(s) > 2.0;
    }
    return hits;
  };
  auto count_xyz = [mu](std::uint64_t, StreamRng& rng, std::uint64_t len) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < len; ++i) {
      const double x = 2.0 * uniform01(rng) - 1.0;
      const double y = 2.0 * uniform01(rng) - 1.0;
      const double z = uniform01(rng);
      hits += mu * std::abs(x * std::sqrt(z) + y * std::sqrt(1.0 - z)) > 1.0;
    }
    return hits;
  };

  const std::uint64_t hits =
      cfg.method == McMethod::Angles
          ? chunked_count(cfg.samples, cfg.chunk_size, cfg.seed, workers, count_angles)
          : chunked_count(cfg.samples, cfg.chunk_size, cfg.seed, workers, count_xyz);

  McEstimate out;
  out.violations = hits;
  out.n = cfg.samples;
  out.seed = cfg.seed;
  out.fraction = static_cast<double>(hits) / static_cast<double>(cfg.samples);
  out.std_error = std::sqrt(out.fraction * (1.0 - out.fraction) / static_cast<double>(cfg.samples));
  return out;
}

}  // namespace rbnl
