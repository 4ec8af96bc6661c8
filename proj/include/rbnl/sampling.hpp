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
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

namespace rbnl {

// Reproducible chunked random streams. A sample stream of length n is cut
// into chunks of fixed size; chunk k draws from its own generator seeded by
// a stateless mix of (seed, k), so any assignment of chunks to workers
// yields the same per-chunk results.

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using StreamRng = std::mt19937_64;

inline StreamRng chunk_rng(std::uint64_t seed, std::uint64_t chunk) {
  const std::uint64_t h1 = splitmix64(seed);
  const std::uint64_t h2 = splitmix64(h1 ^ splitmix64(chunk + 0x632be59bd9b4e019ULL));
  std::seed_seq seq{static_cast<std::uint32_t>(h1), static_cast<std::uint32_t>(h1 >> 32),
                    static_cast<std::uint32_t>(h2), static_cast<std::uint32_t>(h2 >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return StreamRng(seq);
}

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double uniform01(StreamRng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform point on the unit sphere: z uniform in [-1, 1], azimuth uniform.
inline std::array<double, 3> sphere_point(StreamRng& rng) {
  const double z = 2.0 * uniform01(rng) - 1.0;
  const double phi = 2.0 * std::numbers::pi * uniform01(rng);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {s * std::cos(phi), s * std::sin(phi), z};
}

/**
 * Runs count_chunk(chunk_index, chunk_rng, samples_in_chunk) for every
 * chunk of an n-sample stream on `workers` threads and returns the sum.
 * The total is independent of the worker count.
 */
template <class CountChunk>
std::uint64_t chunked_count(std::uint64_t n, std::uint64_t chunk_size, std::uint64_t seed,
                            unsigned workers, CountChunk&& count_chunk) {
  const std::uint64_t chunks = (n + chunk_size - 1) / chunk_size;
  std::vector<std::uint64_t> per_chunk(chunks, 0);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t k = next.fetch_add(1); k < chunks; k = next.fetch_add(1)) {
      StreamRng rng = chunk_rng(seed, k);
      const std::uint64_t len = std::min(chunk_size, n - k * chunk_size);
      per_chunk[k] = count_chunk(k, rng, len);
    }
  };
  workers = std::max(1u, workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : per_chunk) total += c;
  return total;
}

}  // namespace rbnl
