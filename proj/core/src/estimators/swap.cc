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

#include "dqipe/estimators/swap.h"

#include <cmath>
#include <stdexcept>

#include "dqipe/linalg/measures.h"
#include "dqipe/linalg/random_states.h"

namespace dqipe {

EstimateRecord swap_test(double f, std::size_t k, RngStream &rng) {
    if (!(f >= 0.0 && f <= 1.0)) {
        throw std::invalid_argument("swap_test: f must lie in [0, 1]");
    }
    if (k == 0) {
        throw std::invalid_argument("swap_test: k must be positive");
    }
    double p0 = (1.0 + f) / 2.0;
    std::size_t ones = 0;
    for (std::size_t i = 0; i < k; i++) {
        if (!rng.bernoulli(p0)) {
            ones++;
        }
    }
    EstimateRecord r;
    r.k = k;
    r.raw = double(ones) / double(k);
    r.w = 1.0 - 2.0 * r.raw;
    r.seed = rng.seed();
    r.path = rng.path();
    return r;
}

double swap_test_variance(double f, std::size_t k) {
    return (1.0 - f * f) / double(k);
}

double generalized_swap_variance(const DensityMatrix &rho, const DensityMatrix &sigma, std::size_t k) {
    require_same_dim(rho.dim(), sigma.dim(), "generalized_swap_variance");
    if (k == 0) {
        throw std::invalid_argument("generalized_swap_variance: k must be positive");
    }
    const ComplexMatrix &r = rho.matrix();
    const ComplexMatrix &s = sigma.matrix();
    double f = trace_inner(rho, sigma);
    double t1 = (r * r * s).trace().real();
    double t2 = (r * s * s).trace().real();
    double kk = double(k);
    return 1.0 / (kk * kk) + (kk - 1) / (kk * kk) * (t1 + t2) - (2 * kk - 1) / (kk * kk) * f * f;
}

std::pair<PureState, PureState> make_state_pair(std::size_t d, double f, RngStream &rng) {
    if (!(f >= 0.0 && f <= 1.0)) {
        throw std::invalid_argument("make_state_pair: f must lie in [0, 1]");
    }
    PureState phi = sample_haar_state(d, rng);
    if (f == 1.0) {
        return {phi, phi};
    }
    if (d == 1) {
        throw InvalidDimension("make_state_pair: d = 1 only admits f = 1");
    }
    PureState perp = sample_haar_orthogonal_to(phi, rng);
    ComplexVector psi = std::sqrt(f) * phi.amplitudes() + std::sqrt(1.0 - f) * perp.amplitudes();
    return {phi, PureState::normalized(std::move(psi))};
}

}  // namespace dqipe
