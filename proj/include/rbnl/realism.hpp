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
#include <string>
#include <utility>
#include <vector>

#include "rbnl/errors.hpp"
#include "rbnl/linalg.hpp"
#include "rbnl/states.hpp"

namespace rbnl {

/// A projective observable acting on one factor of a bipartite system.
struct LocalPVM {
  PVM pvm;
  Site site;
};

inline LocalPVM on_a(PVM p) { return {std::move(p), Site::A}; }
inline LocalPVM on_b(PVM p) { return {std::move(p), Site::B}; }

namespace detail {

inline void require_compatible(const DensityMatrix& rho, const LocalPVM& m) {
  if (m.pvm.dim() != rho.dims().of(m.site)) {
    throw DomainError("dims", "PVM of dimension " + std::to_string(m.pvm.dim()) +
                                  " cannot act on site " + to_string(m.site) +
                                  " of dimension " + std::to_string(rho.dims().of(m.site)));
  }
}

inline ComplexMatrix embed(const ComplexMatrix& p, Dims dims, Site site) {
  return site == Site::A ? tensor(p, ComplexMatrix::Identity(dims.b, dims.b))
                         : tensor(ComplexMatrix::Identity(dims.a, dims.a), p);
}

}  // namespace detail

/**
 * Unrevealed measurement of a local observable:
 *   Phi_A(rho) = sum_a (A_a (x) I) rho (A_a (x) I)
 * and the mirror image for site B. Uses the sandwich form, so outcomes of
 * zero probability need no special treatment.
 */
inline DensityMatrix dephase(const DensityMatrix& rho, const LocalPVM& m) {
  detail::require_compatible(rho, m);
  const Eigen::Index n = rho.dim();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (const ComplexMatrix& p : m.pvm.projectors()) {
    const ComplexMatrix big = detail::embed(p, rho.dims(), m.site);
    out.noalias() += big * rho.matrix() * big;
  }
  return DensityMatrix::trusted(std::move(out), rho.dims());
}

/// Irreality of an observable given rho: S(Phi(rho)) - S(rho), in nats.
inline double irreality(const LocalPVM& m, const DensityMatrix& rho) {
  return von_neumann_entropy(dephase(rho, m)) - von_neumann_entropy(rho);
}

namespace detail {

inline void require_distinct_sites(const LocalPVM& a, const LocalPVM& b) {
  if (a.site == b.site) {
    throw DomainError("sites", std::string("both observables act on site ") + to_string(a.site));
  }
}

}  // namespace detail

/**
 * Change in the irreality of `local` caused by an unrevealed measurement of
 * `remote` on the other site:
 *   I(local|rho) - I(local|Phi_remote(rho)).
 */
inline double delta_irreality(const LocalPVM& local, const LocalPVM& remote,
                              const DensityMatrix& rho) {
  detail::require_distinct_sites(local, remote);
  const DensityMatrix remote_dephased = dephase(rho, remote);
  return irreality(local, rho) - irreality(local, remote_dephased);
}

/**
 * Same quantity through the symmetric entropy combination
 *   S(Phi_A) + S(Phi_B) - S(Phi_A Phi_B) - S(rho).
 */
inline double delta_irreality_symmetric(const LocalPVM& a, const LocalPVM& b,
                                        const DensityMatrix& rho) {
  detail::require_distinct_sites(a, b);
  const DensityMatrix da = dephase(rho, a);
  const DensityMatrix db = dephase(rho, b);
  const DensityMatrix dab = dephase(da, b);
  return von_neumann_entropy(da) + von_neumann_entropy(db) - von_neumann_entropy(dab) -
         von_neumann_entropy(rho);
}

/// True when rho is left unchanged by the unrevealed measurement of `m`.
inline bool is_reality_state(const DensityMatrix& rho, const LocalPVM& m,
                             double tol = kStateTolerance) {
  return max_abs_diff(rho.matrix(), dephase(rho, m).matrix()) <= tol;
}

/// True when rho equals the product of its marginals.
inline bool is_product_state(const DensityMatrix& rho, double tol = kStateTolerance) {
  const ComplexMatrix pa = partial_trace(rho, Site::A);
  const ComplexMatrix pb = partial_trace(rho, Site::B);
  return max_abs_diff(rho.matrix(), tensor(pa, pb)) <= tol;
}

/**
 * Ingredients of a state with an element of reality for an observable on A:
 *   sum_k p_k Phi_A(rho_k^A) (x) rho_k^B.
 * Local states are single-system DensityMatrix values.
 */
struct RealityComponents {
  std::vector<double> weights;
  std::vector<DensityMatrix> local_a;
  std::vector<DensityMatrix> local_b;
};

inline DensityMatrix make_reality_state(const RealityComponents& c, const PVM& a_pvm) {
  const std::size_t k = c.weights.size();
  if (k == 0 || c.local_a.size() != k || c.local_b.size() != k) {
    throw DomainError("components", "weights and local states must have equal, nonzero length");
  }
  double total = 0.0;
  for (double w : c.weights) {
    if (!(w >= 0.0)) throw DomainError("weights", "weights must be nonnegative");
    total += w;
  }
  if (!(std::abs(total - 1.0) <= 1e-12)) {
    throw DomainError("weights", "weights sum to " + std::to_string(total));
  }
  const int da = c.local_a.front().dim();
  const int db = c.local_b.front().dim();
  if (a_pvm.dim() != da) throw DomainError("dims", "PVM does not act on the A states");
  ComplexMatrix out = ComplexMatrix::Zero(da * db, da * db);
  for (std::size_t i = 0; i < k; ++i) {
    if (c.local_a[i].dim() != da || c.local_b[i].dim() != db) {
      throw DomainError("dims", "component " + std::to_string(i) + " has inconsistent dims");
    }
    ComplexMatrix real_a = ComplexMatrix::Zero(da, da);
    for (const ComplexMatrix& p : a_pvm.projectors()) real_a += p * c.local_a[i].matrix() * p;
    out += c.weights[i] * tensor(real_a, c.local_b[i].matrix());
  }
  return DensityMatrix::trusted(std::move(out), Dims{da, db});
}

}  // namespace rbnl
