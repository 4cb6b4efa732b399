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

#include "dqipe/linalg/rng.h"

#include <gtest/gtest.h>

#include <cmath>

using namespace dqipe;

TEST(rng_stream, same_path_same_sequence) {
    RngStream a(42, {1, 2});
    RngStream b(42, {1, 2});
    for (int i = 0; i < 100; i++) {
        EXPECT_EQ(a(), b());
    }
    EXPECT_EQ(a.normal(), b.normal());
}

TEST(rng_stream, child_ignores_parent_consumption) {
    RngStream a(7);
    RngStream b(7);
    for (int i = 0; i < 10; i++) {
        b();
    }
    EXPECT_EQ(a.child(3)(), b.child(3)());
    EXPECT_EQ(a.child(3).key(), RngStream(7, {3}).key());
}

TEST(rng_stream, distinct_paths_differ) {
    EXPECT_NE(RngStream(1, {0}).key(), RngStream(1, {0, 0}).key());
    EXPECT_NE(RngStream(1, {0}).key(), RngStream(1, {1}).key());
    EXPECT_NE(RngStream(1).key(), RngStream(2).key());
}

TEST(rng_stream, sibling_streams_uncorrelated) {
    RngStream a(5, {0});
    RngStream b(5, {1});
    const int n = 100000;
    double sab = 0.0;
    for (int i = 0; i < n; i++) {
        sab += (a.uniform() - 0.5) * (b.uniform() - 0.5);
    }
    // Var of each product is 1/144, so the mean has SE 1/(12 sqrt n).
    EXPECT_LT(std::abs(sab / n), 4.0 / (12.0 * std::sqrt(double(n))));
}

TEST(rng_stream, complex_normal_unit_variance) {
    RngStream r(9);
    const int n = 100000;
    double s = 0.0;
    for (int i = 0; i < n; i++) {
        s += std::norm(r.complex_normal());
    }
    // |z|^2 is Exp(1): SE = 1/sqrt(n).
    EXPECT_NEAR(s / n, 1.0, 3.0 / std::sqrt(double(n)));
}
