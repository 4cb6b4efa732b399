// Copyright 2026 The dqipe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dqipe/estimators/record.h"
#include "dqipe/linalg/rng.h"
#include "dqipe/linalg/types.h"

namespace dqipe {

using Outcomes = std::vector<std::uint32_t>;

struct CollisionSamples {
    std::size_t d = 0;
    Outcomes x;
    Outcomes y;
};

/// p_b = <b|U rho U^dag|b>. Throws std::logic_error if the sum is off by > 1e-8.
RealVector born_probabilities(const DensityMatrix &rho, const ComplexMatrix &u);

/// m i.i.d. computational-basis outcomes of U rho U^dag.
Outcomes born_sample(const DensityMatrix &rho, const ComplexMatrix &u, std::size_t m, RngStream &rng);

/// (1/m^2) sum_{j,l} [x_j = y_l] over all m^2 ordered cross pairs.
double classical_collision(const CollisionSamples &s);

/// g/m^2 + (1/m)(sum p q^2 + sum p^2 q), g = sum p q.
double collision_variance_bound(const RealVector &p, const RealVector &q, std::size_t m);

/// Exact Var(g~): (1/m^4)(m^2 g + m^2(m-1)^2 g^2 + m^2(m-1)(sum p q^2 + sum p^2 q)) - g^2.
double collision_variance_exact(const RealVector &p, const RealVector &q, std::size_t m);

/// Haar unitary for basis i of a single-copy run, drawn from shared.child(i).
ComplexMatrix shared_basis(std::size_t d, const RngStream &shared, std::size_t i);

/// Referee step of the single-copy estimator: w = mean_i ((d+1) g~_i - 1).
EstimateRecord singlecopy_from_outcomes(std::size_t d, const std::vector<Outcomes> &alice,
                                        const std::vector<Outcomes> &bob);

/// Single-copy estimator with N bases and m copies per basis per party. Bases come from
/// rng.child(streams::kShared); outcomes from the kAlice / kBob children.
EstimateRecord singlecopy_estimate(const DensityMatrix &rho, const DensityMatrix &sigma, std::size_t n_bases,
                                   std::size_t m, const RngStream &rng);

/// Exact Var(g~(U,S)) for pure inputs with overlap f; Var(w_i) is (d+1)^2 times this.
double singlecopy_variance_exact_pure(double d, double m, double f);

/// 1/d^3 + 1/(m^2 d) + 1/(m d^2).
double singlecopy_variance_scale(double d, double m);

}  // namespace dqipe
