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

#include "dqipe/symmetric/povm.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/distributions/beta.hpp>

#include "dqipe/linalg/measures.h"
#include "dqipe/linalg/random_states.h"

using namespace dqipe;

namespace {

struct Stats {
    double mean, var, se;
};

Stats fidelity_stats(std::size_t d, std::size_t k, int n, std::uint64_t seed) {
    RngStream rng(seed);
    PureState phi = sample_haar_state(d, rng);
    double s = 0, s2 = 0;
    for (int i = 0; i < n; i++) {
        double x = overlap2(phi, standard_povm_sample(phi, k, rng).u);
        s += x;
        s2 += x * x;
    }
    double mean = s / n;
    double var = (s2 - n * mean * mean) / (n - 1);
    return {mean, var, std::sqrt(var / n)};
}

}  // namespace

TEST(standard_povm, mean_fidelity_d4_k2) {
    auto st = fidelity_stats(4, 2, 100000, 1);
    EXPECT_NEAR(st.mean, 0.5, 3 * st.se);
}

TEST(standard_povm, fidelity_variance_d16_k4) {
    auto st = fidelity_stats(16, 4, 100000, 2);
    double d = 16, k = 4;
    double want = (d - 1) * (k + 1) / ((d + k) * (d + k) * (d + k + 1));
    EXPECT_NEAR(st.var / want, 1.0, 0.05);
    EXPECT_NEAR(st.mean, (k + 1) / (d + k), 3 * st.se);
}

TEST(standard_povm, k0_is_haar) {
    auto st = fidelity_stats(5, 0, 100000, 3);
    EXPECT_NEAR(st.mean, 0.2, 3 * st.se);
}

TEST(standard_povm, outcome_consistent_with_alpha2) {
    RngStream rng(4);
    PureState phi = sample_haar_state(6, rng);
    for (int i = 0; i < 100; i++) {
        auto s = standard_povm_sample(phi, 3, rng);
        EXPECT_NEAR(overlap2(phi, s.u), s.alpha2, 1e-12);
        EXPECT_FALSE(s.degenerate);
    }
}

TEST(standard_povm, d1_degenerate) {
    RngStream rng(5);
    auto s = standard_povm_sample(PureState::basis(1, 0), 4, rng);
    EXPECT_TRUE(s.degenerate);
    EXPECT_NEAR(std::abs(s.u[0]), 1.0, 1e-12);
}

TEST(standard_povm, alpha2_marginal_ks) {
    // The outcome density C(d+k-1,k) x^{2k} 2(d-1)(1-x^2)^{d-2} x for alpha = |<phi|u>|
    // becomes Beta(k+1, d-1) after substituting y = x^2.
    const std::size_t d = 8, k = 3;
    RngStream rng(6);
    PureState phi = sample_haar_state(d, rng);
    const int n = 100000;
    std::vector<double> xs(n);
    for (int i = 0; i < n; i++) {
        xs[i] = overlap2(phi, standard_povm_sample(phi, k, rng).u);
    }
    std::sort(xs.begin(), xs.end());
    boost::math::beta_distribution<double> law(k + 1.0, d - 1.0);
    double ks = 0.0;
    for (int i = 0; i < n; i++) {
        double c = boost::math::cdf(law, xs[i]);
        ks = std::max({ks, std::abs(c - double(i) / n), std::abs(c - double(i + 1) / n)});
    }
    EXPECT_LT(ks, 0.01);
}
