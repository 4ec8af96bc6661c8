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

// Prints N_rb, N_vol and N_max for a few Werner weights, and checks the
// optimizer against the closed form along the way.

#include <cstdio>

#include "rbnl/rbnl.hpp"

int main() {
  std::printf("%6s %12s %12s %12s %12s\n", "mu", "n_rb", "n_rb(opt)", "n_vol", "n_max");
  for (double mu : {0.25, 0.5, 0.7, 0.75, 0.9, 1.0}) {
    const rbnl::NrbResult opt = rbnl::nrb_two_qubit(rbnl::werner(mu));
    std::printf("%6.2f %12.8f %12.8f %12.8f %12.8f\n", mu, rbnl::nrb_werner_closed_form(mu),
                opt.value, rbnl::nvol_analytic(mu), rbnl::nmax_werner(mu));
  }
}
