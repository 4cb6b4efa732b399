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
#include <span>
#include <vector>

#include "dqipe/linalg/types.h"

namespace dqipe {

/// Occupation numbers (l_0, ..., l_{d-1}) of a length-k string over {0..d-1}.
using TypeVector = std::vector<std::uint32_t>;

/// A permutation of k tensor factors: factor r is moved to position perm[r].
using Permutation = std::vector<std::size_t>;

/// C(d+k-1, k) in exact integer arithmetic. Throws std::overflow_error past 64 bits.
std::uint64_t sym_dimension(std::uint64_t d, std::uint64_t k);

/// All type vectors for (d, k), ordered lexicographically from (k,0,...,0)
/// down to (0,...,0,k).
std::vector<TypeVector> type_vectors(std::size_t d, std::size_t k);

/// Normalized symmetric basis of the symmetric subspace of (C^d)^{\otimes k}.
///
/// Each basis vector is the uniform superposition over the computational
/// strings of one type, kept sparse as the list of those string indices.
class SymBasis {
   public:
    /// Needs d^k within the dense budget since every string is visited.
    SymBasis(std::size_t d, std::size_t k);

    std::size_t d() const {
        return d_;
    }
    std::size_t k() const {
        return k_;
    }
    std::size_t size() const {
        return types_.size();
    }
    const TypeVector &type(std::size_t i) const {
        return types_[i];
    }
    /// Computational-basis indices (ascending) whose type is type(i).
    const std::vector<std::size_t> &support(std::size_t i) const {
        return support_[i];
    }
    ComplexVector vector(std::size_t i) const;
    /// d^k x size() matrix with the basis vectors as columns.
    ComplexMatrix dense() const;

   private:
    std::size_t d_;
    std::size_t k_;
    std::vector<TypeVector> types_;
    std::vector<std::vector<std::size_t>> support_;
};

/// P_d(pi) acting on a flat vector of k factors of dimension d.
ComplexVector apply_permutation(const Permutation &perm, const ComplexVector &x, std::size_t d);

/// Dense d^k x d^k permutation matrix, k = perm.size().
ComplexMatrix permutation_operator(const Permutation &perm, std::size_t d);

/// pi1 o pi2, i.e. r -> pi1[pi2[r]].
Permutation compose(const Permutation &pi1, const Permutation &pi2);

/// Orthogonal projector onto the symmetric subspace, assembled from the type
/// classes (equal to the average of all P_d(pi)).
ComplexMatrix sym_projector(std::size_t d, std::size_t k);

/// sigma_m = P_sym / C(d+k-1, k).
DensityMatrix maximally_mixed_sym(std::size_t d, std::size_t k);

}  // namespace dqipe
