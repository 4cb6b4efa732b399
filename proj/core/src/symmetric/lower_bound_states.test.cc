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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dqipe/linalg/random_states.h"

using namespace dqipe;

namespace {

PureState haar_off_e0(std::size_t dim, RngStream &rng) {
    return sample_haar_orthogonal_to(PureState::basis(dim, 0), rng);
}

}  // namespace

TEST(phi_t_state, endpoints) {
    RngStream rng(1);
    PureState phi = haar_off_e0(4, rng);
    EXPECT_LT((phi_t_state(phi, 3, 0).amplitudes() - PureState::basis(4, 0).tensor_power(3)).norm(), 1e-14);
    EXPECT_LT((phi_t_state(phi, 3, 3).amplitudes() - phi.tensor_power(3)).norm(), 1e-14);
    EXPECT_THROW(phi_t_state(PureState::basis(4, 0), 2, 1), std::invalid_argument);
}

TEST(phi_t_state, preserves_inner_product_power) {
    RngStream rng(2);
    for (int i = 0; i < 10; i++) {
        PureState a = haar_off_e0(4, rng);
        PureState b = haar_off_e0(4, rng);
        Complex got = phi_t_state(a, 3, 2).amplitudes().dot(phi_t_state(b, 3, 2).amplitudes());
        Complex want = std::pow(a.amplitudes().dot(b.amplitudes()), 2);
        EXPECT_LT(std::abs(got - want), 1e-10);
    }
}

TEST(averaged_phase_state, normalization_and_small_eps) {
    RngStream rng(3);
    PureState phi = haar_off_e0(3, rng);
    auto rho = averaged_phase_state(phi, 0.4, 3);
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-10);
    auto tiny = averaged_phase_state(phi, 1e-9, 2);
    EXPECT_LT(max_abs_diff(tiny.matrix(), PureState::basis(3, 0).tensor_power(2) *
                                              PureState::basis(3, 0).tensor_power(2).adjoint()),
              1e-8);
}

TEST(averaged_phase_state, matches_theta_quadrature) {
    RngStream rng(4);
    const double eps = 0.3;
    const std::size_t k = 2;
    PureState phi = haar_off_e0(3, rng);
    const int grid = 256;
    ComplexMatrix acc = ComplexMatrix::Zero(9, 9);
    for (int g = 0; g < grid; g++) {
        double theta = 2 * std::numbers::pi * g / grid;
        ComplexVector x = std::sqrt(eps) * phi.amplitudes();
        x(0) += std::sqrt(1 - eps) * std::polar(1.0, theta);
        ComplexVector v = PureState(x).tensor_power(k);
        acc += v * v.adjoint();
    }
    acc /= double(grid);
    EXPECT_LT(max_abs_diff(acc, averaged_phase_state(phi, eps, k).matrix()), 1e-6);
}
