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

#include "dqipe/estimators/multicopy.h"

#include <gtest/gtest.h>

#include <cmath>

#include "dqipe/estimators/swap.h"
#include "dqipe/linalg/measures.h"
#include "dqipe/linalg/random_states.h"

using namespace dqipe;

namespace {

struct Acc {
    double s = 0, s2 = 0;
    int n = 0;
    void add(double x) {
        s += x;
        s2 += x * x;
        n++;
    }
    double mean() const {
        return s / n;
    }
    double var() const {
        return (s2 - n * mean() * mean()) / (n - 1);
    }
    double se() const {
        return std::sqrt(var() / n);
    }
};

}  // namespace

TEST(multicopy_constants, inverse_map) {
    auto c = MultiCopyConstants::make(8, 5);
    EXPECT_LE(c.A + c.B, 1.0);
    for (double f : {0.0, 0.3, 1.0}) {
        EXPECT_NEAR(c.estimate(c.A + c.B * f), f, 1e-14);
        EXPECT_NEAR(multicopy_from_overlap(8, 5, c.A + c.B * f), f, 1e-14);
    }
}

TEST(multicopy_estimate, d1_returns_one) {
    RngStream rng(1);
    auto r = multicopy_estimate(PureState::basis(1, 0), PureState::basis(1, 0), 7, rng);
    EXPECT_TRUE(r.degenerate);
    EXPECT_NEAR(r.w, 1.0, 1e-12);
}

TEST(multicopy_estimate, unbiased_and_intermediate_identity) {
    const std::size_t d = 8, k = 16;
    RngStream master(2);
    for (double f : {0.0, 0.5, 1.0}) {
        Acc w, x;
        for (int t = 0; t < 10000; t++) {
            RngStream trial = master.child(t);
            RngStream inst = trial.child(9);
            auto [phi, psi] = make_state_pair(d, f, inst);
            auto r = multicopy_estimate(phi, psi, k, trial);
            w.add(r.w);
            x.add(r.raw);
        }
        auto c = MultiCopyConstants::make(d, k);
        EXPECT_NEAR(w.mean(), f, 3 * w.se()) << f;
        EXPECT_NEAR(x.mean(), c.A + c.B * f, 3 * x.se()) << f;
    }
}

TEST(multicopy_estimate, reproducible) {
    RngStream rng(3, {4, 5});
    auto [phi, psi] = make_state_pair(6, 0.2, rng);
    auto a = multicopy_estimate(phi, psi, 3, rng);
    auto b = multicopy_estimate(phi, psi, 3, RngStream(3, {4, 5}));
    EXPECT_EQ(a.w, b.w);
    EXPECT_EQ(a.path, (std::vector<std::uint64_t>{4, 5}));
}

TEST(multicopy_estimate, rejects_mixed) {
    RngStream rng(4);
    auto mixed = DensityMatrix::maximally_mixed(3);
    auto pure = DensityMatrix::from_pure(PureState::basis(3, 0));
    EXPECT_THROW(multicopy_estimate(mixed, pure, 2, rng), MixedStateRejected);
    EXPECT_NO_THROW(multicopy_estimate(pure, pure, 2, rng));
}

TEST(multicopy_variance, frozen_values) {
    EXPECT_NEAR(multicopy_variance_exact(6, 12, 0), 7715.0 / 207936, 1e-15);
    EXPECT_NEAR(multicopy_variance_exact(6, 12, 1), 25475.0 / 207936, 1e-15);
    EXPECT_NEAR(multicopy_variance_exact(8, 16, 0.5), 13563.0 / 128000, 1e-15);
}

TEST(multicopy_variance, nonnegative_below_bounds_and_decreasing) {
    for (double d : {2.0, 4.0, 8.0, 16.0, 64.0}) {
        for (double f : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            double prev = INFINITY;
            for (double k = 1; k <= 200; k++) {
                double v = multicopy_variance_exact(d, k, f);
                EXPECT_GE(v, -1e-12);
                EXPECT_LE(v, multicopy_variance_bound(d, k, f) + 1e-12);
                // The looser form with 4f/k in the leading term.
                EXPECT_LE(v, 4 * f / k + (2 * d * f + f * f + 4) / (k * k) + (4 * d + 4) / (k * k * k) +
                                 (d * d + 2 * d) / (k * k * k * k) + 1e-12);
                EXPECT_LT(v, prev);
                prev = v;
            }
        }
    }
}

TEST(multicopy_variance, matches_monte_carlo_small) {
    const std::size_t d = 6, k = 12;
    RngStream master(5);
    PureState phi = sample_haar_state(d, master);
    Acc w;
    for (int t = 0; t < 20000; t++) {
        w.add(multicopy_estimate(phi, phi, k, master.child(t)).w);
    }
    EXPECT_NEAR(w.var() / multicopy_variance_exact(d, k, 1.0), 1.0, 0.05);
}

TEST(dipe_threshold, basics) {
    RngStream rng(6);
    PureState u = sample_haar_state(32, rng);
    EXPECT_EQ(dipe_decide_threshold(u, u, 32), DipeCase::same);
    EXPECT_EQ(dipe_decide_threshold(PureState::basis(32, 0), PureState::basis(32, 1), 32), DipeCase::independent);
}

TEST(dipe_pi0, extremes) {
    RngStream rng(7);
    PureState u = sample_haar_state(5, rng);
    for (int i = 0; i < 100; i++) {
        EXPECT_EQ(dipe_decide_pi0(u, u, 3, rng), DipeCase::same);
        EXPECT_EQ(dipe_decide_pi0(PureState::basis(5, 0), PureState::basis(5, 2), 3, rng), DipeCase::independent);
    }
}
