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
#include <vector>

#include "dqipe/linalg/types.h"

namespace dqipe::oracles {

/// Hermitian operators A_1..A_n (1 <= n <= 4) on C^d.
struct MomentSpec {
    std::vector<ComplexMatrix> ops;

    std::size_t dim() const;
    /// Throws unless 1-4 square, equal-size, Hermitian (1e-10) matrices.
    void validate() const;
};

/// E_psi prod_i <psi|A_i|psi> for Haar psi:
/// sum over pi in S_n of prod over cycles of Tr(A_{c_1} ... A_{c_r}),
/// divided by d(d+1)...(d+n-1).
double haar_moment_exact(const MomentSpec &spec);

/// Same moments for psi' Haar in the orthogonal complement of psi (1 or 2 ops).
/// With Q = I - psi: Tr(AQ)/(d-1), and (Tr(AQ)Tr(BQ) + Tr(AQBQ))/(d(d-1)).
double perp_moment_exact(const PureState &psi, const std::vector<ComplexMatrix> &ops);

}  // namespace dqipe::oracles
