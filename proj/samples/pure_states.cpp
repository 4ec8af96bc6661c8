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

// Schmidt route versus the two-qubit optimizer for a random pure state, and
// the qutrit family scan showing the maximum at gamma = 1.

#include <cmath>
#include <cstdio>

#include "rbnl/rbnl.hpp"

int main() {
  const rbnl::PureState psi = rbnl::random_pure(2, 2, 7);
  const rbnl::PureNrbResult schmidt = rbnl::nrb_pure(psi);
  const rbnl::NrbResult opt = rbnl::nrb_two_qubit(psi.density());
  std::printf("random qubit pair: E = %.10f, optimizer = %.10f, eta = %.6f\n", schmidt.value,
              opt.value, opt.eta);

  for (int k = 0; k <= 10; ++k) {
    const double gamma = 0.2 * k;
    std::printf("gamma = %.1f  N_rb = %.10f\n", gamma,
                rbnl::nrb_pure(rbnl::qutrit_family(gamma)).value);
  }
  std::printf("ln 3        = %.10f\n", std::log(3.0));
}
