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

#include "dqipe/linalg/random_states.h"

#include <gtest/gtest.h>

#include <cmath>

#include "dqipe/linalg/measures.h"

using namespace dqipe;

namespace {

struct Moments {
    double mean = 0.0;
    double var = 0.0;
    double se() const {
        return std::sqrt(var / n);
    }
    int n = 0;
};

template <typename F>
Moments moments(int n, F &&draw) {
    double s = 0.0, s2 = 0.0;
    for (int i = 0; i < n; i++) {
        double x = draw();
        s += x;
        s2 += x * x;
    }
    Moments m;
    m.n = n;
    m.mean = s / n;
    m.var = (s2 - n * m.mean * m.mean) / (n - 1);
    return m;
}

}  // namespace

TEST(haar_state, unit_norm_and_d1_phase) {
    RngStream rng(1);
    for (std::size_t d : {1u, 2u, 7u, 40u}) {
        PureState s = sample_haar_state(d, rng);
        EXPECT_NEAR(s.amplitudes().squaredNorm(), 1.0, 1e-12);
    }
    EXPECT_NEAR(std::abs(sample_haar_state(1, rng)[0]), 1.0, 1e-12);
    EXPECT_THROW(sample_haar_state(0, rng), InvalidDimension);
}

TEST(haar_state, first_component_mean) {
    RngStream rng(2);
    auto m = moments(100000, [&] { return std::norm(sample_haar_state(4, rng)[0]); });
    EXPECT_NEAR(m.mean, 0.25, 3 * m.se());
}

TEST(haar_state, rotation_invariance_first_two_moments) {
    RngStream rng(3);
    ComplexMatrix v = sample_haar_unitary(4, rng);
    RngStream a(30), b(31);
    auto plain = moments(100000, [&] { return std::norm(sample_haar_state(4, a)[1]); });
    auto rotated = moments(100000, [&] {
        ComplexVector x = v * sample_haar_state(4, b).amplitudes();
        return std::norm(x(1));
    });
    EXPECT_NEAR(plain.mean, rotated.mean, 3 * std::hypot(plain.se(), rotated.se()));
    // Second moment: Var of |a|^2 for Haar d=4 is (d-1)/(d^2(d+1)) = 3/80.
    EXPECT_NEAR(plain.var / rotated.var, 1.0, 0.03);
}

TEST(haar_state, overlap_mean_is_one_over_d) {
    RngStream rng(4);
    auto m = moments(100000, [&] { return overlap2(sample_haar_state(16, rng), sample_haar_state(16, rng)); });
    EXPECT_NEAR(m.mean, 1.0 / 16, 3 * m.se());
}

TEST(haar_unitary, unitary_and_first_column_marginal) {
    RngStream rng(5);
    for (std::size_t d : {1u, 2u, 5u}) {
        EXPECT_TRUE(is_unitary(sample_haar_unitary(d, rng), 1e-10));
    }
    RngStream a(50), b(51);
    auto col = moments(100000, [&] { return std::norm(sample_haar_unitary(3, a)(0, 0)); });
    auto st = moments(100000, [&] { return std::norm(sample_haar_state(3, b)[0]); });
    EXPECT_NEAR(col.mean, st.mean, 3 * std::hypot(col.se(), st.se()));
    EXPECT_NEAR(col.var / st.var, 1.0, 0.03);
}

TEST(haar_unitary, no_phase_bias_on_diagonal) {
    // Without the R-diagonal fix, U_00 would be biased toward the positive real axis.
    RngStream rng(6);
    auto m = moments(100000, [&] { return sample_haar_unitary(2, rng)(0, 0).real(); });
    EXPECT_NEAR(m.mean, 0.0, 3 * m.se());
}

TEST(haar_orthogonal, orthogonal_and_spread) {
    RngStream rng(7);
    PureState phi = sample_haar_state(5, rng);
    for (int i = 0; i < 50; i++) {
        PureState p = sample_haar_orthogonal_to(phi, rng);
        EXPECT_LT(std::abs(phi.amplitudes().dot(p.amplitudes())), 1e-13);
    }
    EXPECT_THROW(sample_haar_orthogonal_to(PureState::basis(1, 0), rng), InvalidDimension);
}

TEST(beta, means) {
    RngStream rng(8);
    auto u = moments(100000, [&] { return sample_beta(1.0, 1.0, rng); });
    EXPECT_NEAR(u.mean, 0.5, 3 * u.se());
    auto b = moments(100000, [&] { return sample_beta(2.0, 3.0, rng); });
    EXPECT_NEAR(b.mean, 0.4, 3 * b.se());
    EXPECT_THROW(sample_beta(0.0, 1.0, rng), std::invalid_argument);
}
