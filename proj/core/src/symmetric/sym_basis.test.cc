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

#include "dqipe/symmetric/sym_basis.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dqipe/linalg/random_states.h"
#include "dqipe/linalg/tensor.h"

using namespace dqipe;

TEST(sym_dimension, values) {
    EXPECT_EQ(sym_dimension(2, 2), 3u);
    EXPECT_EQ(sym_dimension(7, 0), 1u);
    EXPECT_EQ(sym_dimension(9, 1), 9u);
    EXPECT_EQ(sym_dimension(64, 8), 10639125640u);
    EXPECT_THROW(sym_dimension(1000000, 1000), std::overflow_error);
    EXPECT_THROW(sym_dimension(0, 3), InvalidDimension);
}

TEST(type_vectors, count_and_order) {
    auto t = type_vectors(3, 4);
    EXPECT_EQ(t.size(), sym_dimension(3, 4));
    EXPECT_EQ(t.front(), (TypeVector{4, 0, 0}));
    EXPECT_EQ(t.back(), (TypeVector{0, 0, 4}));
    for (const auto &v : t) {
        EXPECT_EQ(std::accumulate(v.begin(), v.end(), 0u), 4u);
    }
    EXPECT_TRUE(std::is_sorted(t.rbegin(), t.rend()));
}

TEST(sym_basis, orthonormal_and_spanning) {
    SymBasis b(3, 3);
    ComplexMatrix m = b.dense();
    EXPECT_EQ(b.size(), 10u);
    EXPECT_LT(max_abs_diff(m.adjoint() * m, ComplexMatrix::Identity(10, 10)), 1e-12);
}

TEST(permutation_operator, identity_swap_and_composition) {
    EXPECT_LT(max_abs_diff(permutation_operator({0, 1, 2}, 2), ComplexMatrix::Identity(8, 8)), 0.0 + 1e-15);
    ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
    swap(0, 0) = swap(3, 3) = 1.0;
    swap(1, 2) = swap(2, 1) = 1.0;
    EXPECT_EQ(max_abs_diff(permutation_operator({1, 0}, 2), swap), 0.0);

    std::vector<Permutation> perms;
    Permutation p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    for (const auto &a : perms) {
        EXPECT_TRUE(is_unitary(permutation_operator(a, 2)));
        for (const auto &b : perms) {
            ComplexMatrix lhs = permutation_operator(a, 2) * permutation_operator(b, 2);
            EXPECT_EQ(max_abs_diff(lhs, permutation_operator(compose(a, b), 2)), 0.0);
        }
    }
    EXPECT_THROW(permutation_operator({0, 0}, 2), std::invalid_argument);
}

TEST(permutation_operator, moves_factor_r_to_position_pi_r) {
    // |0 1 2> with factor 0 -> position 2, 1 -> 0, 2 -> 1 becomes |1 2 0>.
    ComplexVector x = ComplexVector::Zero(27);
    x(0 * 9 + 1 * 3 + 2) = 1.0;
    ComplexVector y = apply_permutation({2, 0, 1}, x, 3);
    EXPECT_EQ(y(1 * 9 + 2 * 3 + 0), Complex(1.0));
}

TEST(sym_projector, matches_permutation_average) {
    for (auto [d, k] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 4}}) {
        Permutation p(k);
        std::iota(p.begin(), p.end(), 0);
        auto n = static_cast<Eigen::Index>(checked_pow(d, k));
        ComplexMatrix avg = ComplexMatrix::Zero(n, n);
        double count = 0;
        do {
            avg += permutation_operator(p, d);
            count++;
        } while (std::next_permutation(p.begin(), p.end()));
        avg /= count;
        EXPECT_LT(max_abs_diff(avg, sym_projector(d, k)), 1e-12) << d << " " << k;
    }
}

TEST(sym_projector, projector_properties) {
    ComplexMatrix p = sym_projector(3, 2);
    EXPECT_NEAR(p.trace().real(), 6.0, 1e-9);
    EXPECT_LT(max_abs_diff(p * p, p), 1e-10);
    EXPECT_TRUE(is_hermitian(p));
    RngStream rng(3);
    PureState phi = sample_haar_state(3, rng);
    ComplexVector v = phi.tensor_power(2);
    EXPECT_LT((p * v - v).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_THROW(sym_projector(10, 5), DenseBudgetExceeded);
}

TEST(sym_projector, monte_carlo_average_of_product_states) {
    RngStream rng(4);
    const int n = 100000;
    ComplexMatrix s = ComplexMatrix::Zero(4, 4);
    Eigen::MatrixXd s2 = Eigen::MatrixXd::Zero(4, 4);
    for (int i = 0; i < n; i++) {
        ComplexVector v = sample_haar_state(2, rng).tensor_power(2);
        ComplexMatrix m = 3.0 * v * v.adjoint();
        s += m;
        s2 += m.cwiseAbs2();
    }
    ComplexMatrix mean = s / double(n);
    ComplexMatrix p = sym_projector(2, 2);
    for (int r = 0; r < 4; r++) {
        for (int c = 0; c < 4; c++) {
            double var = s2(r, c) / n - std::norm(mean(r, c));
            double se = std::sqrt(std::max(var, 0.0) / n);
            EXPECT_LE(std::abs(mean(r, c) - p(r, c)), 5 * se + 1e-12) << r << "," << c;
        }
    }
}

TEST(maximally_mixed_sym, spectrum) {
    auto s = maximally_mixed_sym(2, 1);
    EXPECT_LT(max_abs_diff(s.matrix(), ComplexMatrix::Identity(2, 2) / 2.0), 1e-15);
    auto m = maximally_mixed_sym(3, 3);
    RealVector ev = hermitian_eigenvalues(m.matrix());
    int nonzero = 0;
    for (Eigen::Index i = 0; i < ev.size(); i++) {
        if (ev(i) > 1e-10) {
            nonzero++;
            EXPECT_NEAR(ev(i), 0.1, 1e-10);
        } else {
            EXPECT_NEAR(ev(i), 0.0, 1e-10);
        }
    }
    EXPECT_EQ(nonzero, 10);
}
