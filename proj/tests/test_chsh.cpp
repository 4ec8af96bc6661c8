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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "rbnl/rbnl.hpp"
#include "test_support.hpp"

using namespace rbnl;
using Catch::Matchers::WithinAbs;

namespace {

const double kR = std::numbers::sqrt2 / 2;

ChshSettings tsirelson_settings() {
  // Signs chosen so the singlet correlations add up to -2 sqrt(2).
  return {BlochVector(0, 0, 1), BlochVector(1, 0, 0), BlochVector(kR, 0, kR),
          BlochVector(-kR, 0, kR)};
}

}  // namespace

TEST_CASE("correlator", "[chsh]") {
  const BlochVector z(0, 0, 1);
  CHECK_THAT(correlator(singlet().density(), z, z), WithinAbs(-1.0, 1e-15));
  const BlochVector v(std::sqrt(0.75), 0, 0.5);
  CHECK_THAT(correlator(werner(0.6), z, v), WithinAbs(-0.3, 1e-15));

  Rng rng = make_rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const BlochVector a = random_bloch(rng), b = random_bloch(rng);
    CHECK_THAT(correlator(werner(0), a, b), WithinAbs(0.0, 1e-15));
    const double mu = std::uniform_real_distribution<double>(0, 1)(rng);
    CHECK_THAT(correlator(werner(mu), a, b), WithinAbs(-mu * a.dot(b), 1e-14));
  }
  CHECK_THROWS_AS(correlator(random_density(2, 3, 2, 1), z, z), DomainError);
}

TEST_CASE("CHSH value", "[chsh]") {
  CHECK_THAT(chsh_value(singlet().density(), tsirelson_settings()),
             WithinAbs(2 * std::numbers::sqrt2, 1e-14));
  for (double mu : {0.0, 0.3, 0.7071, 0.9}) {
    CHECK_THAT(chsh_value(werner(mu), tsirelson_settings()),
               WithinAbs(2 * std::numbers::sqrt2 * mu, 1e-14));
  }

  Rng rng = make_rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const DensityMatrix p =
        product_state(random_density(Dims{2, 1}, 2, rng), random_density(Dims{2, 1}, 2, rng));
    const ChshSettings s{random_bloch(rng), random_bloch(rng), random_bloch(rng), random_bloch(rng)};
    CHECK(chsh_value(p, s) <= 2 + 1e-9);
  }
}

TEST_CASE("Tsirelson ceiling", "[chsh][property]") {
  Rng rng = make_rng(3);
  double top = 0.0;
  for (int state = 0; state < 100; ++state) {
    const DensityMatrix rho = random_density(Dims{2, 2}, 1 + state % 4, rng);
    for (int k = 0; k < 1000; ++k) {
      const ChshSettings s{random_bloch(rng), random_bloch(rng), random_bloch(rng),
                           random_bloch(rng)};
      top = std::max(top, chsh_value(rho, s));
    }
  }
  CHECK(top <= 2 * std::numbers::sqrt2 + 1e-9);
}

TEST_CASE("max CHSH matches the two-largest-eigenvalue formula", "[chsh][optimizer]") {
  const MaxChsh s = max_chsh(singlet().density());
  CHECK_THAT(s.value, WithinAbs(2 * std::numbers::sqrt2, 1e-8));
  CHECK_THAT(chsh_value(singlet().density(), s.settings), WithinAbs(s.value, 1e-10));

  Rng rng = make_rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix rho = random_density(Dims{2, 2}, 1 + trial % 4, rng);
    const MaxChsh m = max_chsh(rho);
    CHECK_THAT(m.value, WithinAbs(testing::chsh_max_closed_form(rho), 1e-6));
    CHECK_THAT(chsh_value(rho, m.settings), WithinAbs(m.value, 1e-9));
  }
}

TEST_CASE("N_max", "[chsh]") {
  CHECK_THAT(nmax_werner(1.0), WithinAbs(std::numbers::sqrt2 - 1, 1e-15));
  CHECK(nmax_werner(1 / std::numbers::sqrt2) == 0.0);
  CHECK_THAT(nmax_werner(0.9), WithinAbs(0.9 * std::numbers::sqrt2 - 1, 1e-15));
  CHECK_THAT(nmax_werner(0.9), WithinAbs(0.272792206135786, 1e-12));
  CHECK_THROWS_AS(nmax_werner(1.2), DomainError);

  for (double mu : {0.0, 0.3, 0.7, 1 / std::numbers::sqrt2}) {
    CHECK(nmax_numeric(werner(mu)) == 0.0);
  }
  for (double mu : {0.8, 0.95, 1.0}) {
    CHECK_THAT(nmax_numeric(werner(mu)), WithinAbs(nmax_werner(mu), 1e-8));
  }
}

TEST_CASE("bfrak", "[chsh]") {
  CHECK_THAT(bfrak({1, 1, 0.5}), WithinAbs(std::numbers::sqrt2, 1e-15));
  for (double x : {-1.0, -0.4, 0.0, 0.7, 1.0}) {
    CHECK_THAT(bfrak({x, 0.3, 1}), WithinAbs(std::abs(x), 1e-15));
  }
  CHECK(bfrak({0, 0, 0.37}) == 0.0);
  CHECK_THROWS_AS(ReducedPoint(1.1, 0, 0), DomainError);
  CHECK_THROWS_AS(ReducedPoint(0, 0, -0.1), DomainError);

  SECTION("maximum over z is sqrt(x^2 + y^2)") {
    Rng rng = make_rng(5);
    std::uniform_real_distribution<double> unit(-1, 1);
    for (int trial = 0; trial < 1000; ++trial) {
      const double x = unit(rng), y = unit(rng);
      const double z_star = x * x / (x * x + y * y);
      const double peak = bfrak({std::abs(x), std::abs(y), z_star});
      CHECK_THAT(peak, WithinAbs(std::hypot(x, y), 1e-9));
      for (int k = 0; k <= 20; ++k) CHECK(bfrak({x, y, k / 20.0}) <= peak + 1e-12);
    }
  }
}

TEST_CASE("volume of violation: closed form", "[chsh]") {
  CHECK(nvol_analytic(0.7) == 0.0);
  CHECK(nvol_analytic(1 / std::numbers::sqrt2) == 0.0);
  CHECK(nvol_analytic(0.0) == 0.0);
  CHECK_THAT(nvol_analytic(1.0), WithinAbs(0.245741818250079, 1e-12));
  CHECK_THAT(nvol_analytic(0.8), WithinAbs(0.021141833977423197, 1e-12));
  CHECK_THROWS_AS(nvol_analytic(1.5), DomainError);

  double prev = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double v = nvol_analytic(i / 100.0);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("volume of violation: quadrature", "[chsh]") {
  CHECK(nvol_quadrature(0.5, 100) == 0.0);
  CHECK(nvol_quadrature(0.7, 100) == 0.0);
  CHECK_THROWS_AS(nvol_quadrature(0.9, 10), DomainError);

  const double want[] = {testing::kViolationFraction075, testing::kViolationFraction080,
                         testing::kViolationFraction090, testing::kViolationFraction100};
  const double mus[] = {0.75, 0.8, 0.9, 1.0};
  double prev = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double q = nvol_quadrature(mus[i], 300);
    CHECK_THAT(q, WithinAbs(want[i], 1e-4));
    CHECK(q >= prev);
    prev = q;
  }
}
