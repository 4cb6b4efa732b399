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

#include "dqipe/symmetric/lower_bound_states.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dqipe/linalg/tensor.h"

namespace dqipe {

namespace {

void require_orthogonal_to_e0(const PureState &phi, const char *what) {
    if (std::abs(phi[0]) > 1e-10) {
        throw std::invalid_argument(std::string(what) + ": phi must be orthogonal to e_0");
    }
}

double binomial(std::size_t n, std::size_t r) {
    return std::round(std::exp(std::lgamma(double(n) + 1) - std::lgamma(double(r) + 1) -
                               std::lgamma(double(n - r) + 1)));
}

// Visits every t-subset of {0..k-1} as a membership mask, lexicographically.
template <typename F>
void for_each_subset(std::size_t k, std::size_t t, F &&f) {
    std::vector<std::size_t> pos(t);
    for (std::size_t i = 0; i < t; i++) {
        pos[i] = i;
    }
    std::vector<bool> mask(k);
    for (;;) {
        std::fill(mask.begin(), mask.end(), false);
        for (std::size_t p : pos) {
            mask[p] = true;
        }
        f(mask);
        std::size_t i = t;
        while (i > 0 && pos[i - 1] == k - t + i - 1) {
            i--;
        }
        if (i == 0) {
            return;
        }
        pos[i - 1]++;
        for (std::size_t j = i; j < t; j++) {
            pos[j] = pos[j - 1] + 1;
        }
    }
}

}  // namespace

PureState phi_t_state(const PureState &phi, std::size_t k, std::size_t t) {
    require_orthogonal_to_e0(phi, "phi_t_state");
    if (t > k) {
        throw std::out_of_range("phi_t_state: t must lie in [0, k]");
    }
    std::size_t dim = phi.dim();
    dense_power(dim, k, "phi_t_state");
    ComplexVector e0 = PureState::basis(dim, 0).amplitudes();
    ComplexVector acc = ComplexVector::Zero(static_cast<Eigen::Index>(checked_pow(dim, k)));
    for_each_subset(k, t, [&](const std::vector<bool> &mask) {
        ComplexVector term = ComplexVector::Ones(1);
        for (std::size_t r = 0; r < k; r++) {
            term = kron(term, mask[r] ? phi.amplitudes() : e0);
        }
        acc += term;
    });
    acc /= std::sqrt(binomial(k, t));
    return PureState::normalized(std::move(acc));
}

DensityMatrix averaged_phase_state(const PureState &phi, double eps, std::size_t k) {
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("averaged_phase_state: eps must lie in (0, 1)");
    }
    require_orthogonal_to_e0(phi, "averaged_phase_state");
    auto n = static_cast<Eigen::Index>(dense_power(phi.dim(), k, "averaged_phase_state"));
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (std::size_t t = 0; t <= k; t++) {
        double w = binomial(k, t) * std::pow(eps, double(t)) * std::pow(1.0 - eps, double(k - t));
        ComplexVector v = phi_t_state(phi, k, t).amplitudes();
        out += w * v * v.adjoint();
    }
    return DensityMatrix(0.5 * (out + out.adjoint()));
}

}  // namespace dqipe
