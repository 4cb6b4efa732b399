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

#include "dqipe/linalg/types.h"

namespace dqipe {

/// beta_t = prod_{j=1..k} (t+j) / (d+k-1+j), the eigenvalue of rho_u on W_u^t.
/// Summed in log space; relative accuracy ~1e-15 * k.
double beta_coefficient(std::size_t d, std::size_t k, std::size_t t);

/// dim W_u^t = C(d+k-t-2, k-t), as a double so it survives any (d, k).
double block_dimension(std::size_t d, std::size_t k, std::size_t t);

struct SymBlockSpectrum {
    std::size_t d = 0;
    std::size_t k = 0;
    std::vector<double> beta;
    std::vector<double> dim;

    /// sum_t beta_t dim_t; 1 up to rounding.
    double total_weight() const;
};

/// Requires d >= 2.
SymBlockSpectrum block_spectrum(std::size_t d, std::size_t k);

/// Unitary Householder reflection H (Hermitian, H^2 = I) with H e_0 = u up to a
/// global phase.
ComplexMatrix householder_to(const PureState &u);

/// Orthogonal projector onto W_u^t: the span of the symmetric basis vectors
/// with l_0 = t, rotated by householder_to(u) on every factor.
ComplexMatrix pi_u_t(const PureState &u, std::size_t k, std::size_t t);

/// sum_t beta_t pi_u_t(u, k, t).
DensityMatrix rho_u_closed_form(const PureState &u, std::size_t k);

/// (1/2) || rho_u - sigma_m ||_1 from the block spectrum alone.
///
/// Exact rational arithmetic for k <= 200 and d <= 2^32, log-gamma otherwise.
/// The value is sum over blocks with beta_t < 1/C(d+k-1,k) of
/// dim_t (1/C(d+k-1,k) - beta_t); beta_t increases with t so these blocks form
/// a prefix.
double trace_distance_rho_u_block(std::size_t d, std::size_t k);

/// (d-1)/(d+k-1) - (d+k-2)...(d-1) / ((d+2k-1)...(d+k)): the weight that
/// sigma_m minus rho_u places on W_u^0. Exact path under the same limits.
double pi0_gap_closed_form(std::size_t d, std::size_t k);

/// True iff beta_0 < 1/C(d+k-1,k) <= beta_1, i.e. W_u^0 is the only block
/// below the uniform level and the two quantities above coincide.
bool only_first_block_below_uniform(std::size_t d, std::size_t k);

}  // namespace dqipe
