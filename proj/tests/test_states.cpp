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
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>

#include "rbnl/rbnl.hpp"
#include "test_support.hpp"

using namespace rbnl;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

std::string violated_invariant(const std::function<void()>& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.invariant();
  }
  return "";
}

}  // namespace

TEST_CASE("Bloch vectors", "[states]") {
  CHECK_NOTHROW(BlochVector(0, 0, 1));
  CHECK_THROWS_AS(BlochVector(0, 0, 1.01), DomainError);
  CHECK(violated_invariant([] { BlochVector(1, 1, 0); }) == "unit norm");
  const BlochVector x = BlochVector::from_angles(std::numbers::pi / 2, 0);
  CHECK_THAT(x.x(), WithinAbs(1.0, 1e-15));
  CHECK_THAT((-x).x(), WithinAbs(-1.0, 1e-15));
  CHECK_THROWS_AS(BlochVector::normalized(0, 0, 0), DomainError);
}

TEST_CASE("werner", "[states]") {
  CHECK(max_abs_diff(werner(0).matrix(), ComplexMatrix::Identity(4, 4) / 4.0) < 1e-15);
  CHECK(max_abs_diff(werner(1).matrix(), singlet().density().matrix()) < 1e-15);
  CHECK_THAT(von_neumann_entropy(werner(1)), WithinAbs(0.0, 1e-12));

  const auto ev = hermitian_eigenvalues(werner(0.5).matrix());
  CHECK_THAT(ev[0], WithinAbs(0.125, 1e-15));
  CHECK_THAT(ev[1], WithinAbs(0.125, 1e-15));
  CHECK_THAT(ev[2], WithinAbs(0.125, 1e-15));
  CHECK_THAT(ev[3], WithinAbs(0.625, 1e-15));

  for (int i = 0; i <= 100; ++i) {
    const double mu = i / 100.0;
    // The checked constructor re-validates every invariant.
    CHECK_NOTHROW(DensityMatrix(werner(mu).matrix(), Dims{2, 2}));
  }
  CHECK(violated_invariant([] { werner(1.5); }) == "mu range");
  CHECK(violated_invariant([] { werner(-0.1); }) == "mu range");
}

TEST_CASE("singlet sign convention", "[states]") {
  const ComplexVector& s = singlet().vector();
  const double r = std::numbers::sqrt2 / 2;
  CHECK_THAT(s(0).real(), WithinAbs(0.0, 1e-15));
  CHECK_THAT(s(1).real(), WithinAbs(r, 1e-15));
  CHECK_THAT(s(2).real(), WithinAbs(-r, 1e-15));
  CHECK_THAT(s(3).real(), WithinAbs(0.0, 1e-15));
}

TEST_CASE("DensityMatrix validation names the violated invariant", "[states]") {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4) / 4.0;
  CHECK(violated_invariant([&] { DensityMatrix(m, Dims{2, 3}); }) == "dims");
  CHECK(violated_invariant([&] { DensityMatrix(ComplexMatrix::Zero(2, 3), Dims{2, 1}); }) ==
        "square");

  ComplexMatrix non_herm = m;
  non_herm(0, 1) = 0.1;
  CHECK(violated_invariant([&] { DensityMatrix(non_herm, Dims{2, 2}); }) == "hermitian");

  CHECK(violated_invariant([&] { DensityMatrix(2.0 * m, Dims{2, 2}); }) == "unit trace");

  ComplexMatrix negative = ComplexMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK(violated_invariant([&] { DensityMatrix(negative, Dims{2, 1}); }) ==
        "positive semidefinite");

  ComplexMatrix nan = m;
  nan(0, 0) = std::nan("");
  CHECK(violated_invariant([&] { DensityMatrix(nan, Dims{2, 2}); }) == "finite");
}

TEST_CASE("bloch_pvm", "[states]") {
  const PVM z = bloch_pvm(BlochVector(0, 0, 1));
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  CHECK(max_abs_diff(z.projectors()[0], p0) < 1e-15);
  CHECK(max_abs_diff(z.projectors()[1], p1) < 1e-15);

  const PVM x = bloch_pvm(BlochVector(1, 0, 0));
  CHECK(max_abs_diff(x.projectors()[0], ComplexMatrix::Constant(2, 2, 0.5)) < 1e-15);

  Rng rng = make_rng(2);
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  for (int trial = 0; trial < 1000; ++trial) {
    const BlochVector u = random_bloch(rng);
    const PVM p = bloch_pvm(u);
    const auto& pr = p.projectors();
    CHECK(max_abs_diff(pr[0] * pr[0], pr[0]) < 1e-12);
    CHECK(max_abs_diff(pr[1] * pr[1], pr[1]) < 1e-12);
    CHECK((pr[0] * pr[1]).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(max_abs_diff(pr[0] + pr[1], id) < 1e-12);
    CHECK(max_abs_diff(pr[0] - pr[1], pauli_dot(u)) < 1e-12);
    CHECK(max_abs_diff(p.observable(), pauli_dot(u)) < 1e-12);
  }
}

TEST_CASE("PVM validation", "[states]") {
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  ComplexMatrix half = ComplexMatrix::Identity(2, 2) * 0.5;
  CHECK(violated_invariant([&] { PVM({p0}, {1.0}); }) == "complete");
  CHECK(violated_invariant([&] { PVM({half, half}, {1.0, -1.0}); }) == "idempotent");
  CHECK(violated_invariant([&] { PVM({p0, p0}, {1.0, -1.0}); }) == "orthogonal");
  CHECK_THROWS_AS(PVM({p0}, {1.0, 2.0}), DomainError);
  CHECK(PVM::from_basis(ComplexMatrix::Identity(3, 3)).size() == 3);
}

TEST_CASE("qutrit family", "[states]") {
  CHECK_THAT(entanglement_entropy(qutrit_family(1.0)), WithinAbs(std::log(3.0), 1e-12));
  CHECK_THAT(entanglement_entropy(qutrit_family(0.0)), WithinAbs(std::log(2.0), 1e-12));
  for (double g : {0.0, 0.3, 1.0, 2.5, 10.0}) {
    CHECK_THAT(qutrit_family(g).vector().norm(), WithinAbs(1.0, 1e-14));
    // Schmidt amplitudes {1, gamma, 1} / sqrt(2 + gamma^2), sorted descending.
    std::vector<double> want{1.0, g, 1.0};
    std::sort(want.begin(), want.end(), std::greater<>());
    const auto xi = schmidt(qutrit_family(g)).coefficients;
    for (int i = 0; i < 3; ++i) {
      CHECK_THAT(std::sqrt(xi[static_cast<std::size_t>(i)]),
                 WithinAbs(want[static_cast<std::size_t>(i)] / std::sqrt(2 + g * g), 1e-10));
    }
  }
  CHECK(violated_invariant([] { qutrit_family(-0.1); }) == "gamma range");
}

TEST_CASE("random states", "[states]") {
  SECTION("fixed seed gives identical states") {
    CHECK(random_pure(2, 3, 99).vector() == random_pure(2, 3, 99).vector());
    CHECK(random_density(2, 2, 3, 99).matrix() == random_density(2, 2, 3, 99).matrix());
    CHECK(random_pure(2, 3, 99).vector() != random_pure(2, 3, 100).vector());
  }
  SECTION("traces, ranks and marginal entropies") {
    Rng rng = make_rng(4);
    for (int trial = 0; trial < 500; ++trial) {
      const int rank = 1 + trial % 4;
      const DensityMatrix rho = random_density(Dims{2, 2}, rank, rng);
      CHECK_THAT(rho.matrix().trace().real(), WithinAbs(1.0, 1e-12));
      const auto ev = hermitian_eigenvalues(rho.matrix());
      int nonzero = 0;
      for (double e : ev) nonzero += e > 1e-12;
      CHECK(nonzero == rank);

      const double s = von_neumann_entropy(DensityMatrix::local(
          partial_trace(random_pure(Dims{2, 2}, rng).density(), Site::A)));
      CHECK(s >= -1e-12);
      CHECK(s <= std::log(2.0) + 1e-12);
    }
  }
  SECTION("random unitaries are unitary") {
    Rng rng = make_rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const ComplexMatrix u = random_unitary(3, rng);
      CHECK(max_abs_diff(u.adjoint() * u, ComplexMatrix::Identity(3, 3)) < 1e-12);
    }
  }
}

TEST_CASE("two-qubit Bloch representation", "[states]") {
  const TwoQubitBloch w = two_qubit_bloch(werner(0.6));
  CHECK(w.a.norm() < 1e-15);
  CHECK(w.b.norm() < 1e-15);
  CHECK((w.t + 0.6 * Eigen::Matrix3d::Identity()).norm() < 1e-14);

  Rng rng = make_rng(12);
  const auto& s = pauli();
  for (int trial = 0; trial < 100; ++trial) {
    const DensityMatrix rho = random_density(Dims{2, 2}, 4, rng);
    const TwoQubitBloch b = two_qubit_bloch(rho);
    ComplexMatrix rebuilt = ComplexMatrix::Identity(4, 4);
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    for (int i = 0; i < 3; ++i) {
      rebuilt += b.a(i) * tensor(s[static_cast<std::size_t>(i)], id);
      rebuilt += b.b(i) * tensor(id, s[static_cast<std::size_t>(i)]);
      for (int j = 0; j < 3; ++j) {
        rebuilt += b.t(i, j) * tensor(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
      }
    }
    CHECK(max_abs_diff(rebuilt / 4.0, rho.matrix()) < 1e-12);
  }
  CHECK_THROWS_AS(two_qubit_bloch(random_density(2, 3, 2, 1)), DomainError);
}

TEST_CASE("state file round trip", "[states][io]") {
  const auto dir = std::filesystem::temp_directory_path() / "rbnl_state_io";
  std::filesystem::create_directories(dir);
  const DensityMatrix rho = random_density(2, 2, 2, 31);
  write_state_file(dir / "rho.json", rho);
  const DensityMatrix back = read_state_file(dir / "rho.json");
  CHECK(back.dims() == rho.dims());
  CHECK(max_abs_diff(back.matrix(), rho.matrix()) < 1e-15);

  CHECK_THROWS_AS(read_state_file(dir / "missing.json"), IoError);

  std::ofstream(dir / "broken.json") << "{ not json";
  CHECK(violated_invariant([&] { read_state_file(dir / "broken.json"); }) == "json");

  std::ofstream(dir / "trace.json")
      << R"({"dims":[2,1],"matrix":[[{"re":1,"im":0},{"re":0,"im":0}],[{"re":0,"im":0},{"re":1,"im":0}]]})";
  CHECK(violated_invariant([&] { read_state_file(dir / "trace.json"); }) == "unit trace");

  std::ofstream(dir / "ragged.json") << R"({"dims":[2,1],"matrix":[[{"re":1,"im":0}],[]]})";
  CHECK_THROWS_AS(read_state_file(dir / "ragged.json"), DomainError);
  std::filesystem::remove_all(dir);
}
