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

#include "dqipe/linalg/types.h"

#include <gtest/gtest.h>

using namespace dqipe;

TEST(pure_state, rejects_unnormalized) {
    ComplexVector v(2);
    v << 1.0, 1.0;
    EXPECT_THROW(PureState{v}, std::invalid_argument);
    PureState s = PureState::normalized(v);
    EXPECT_NEAR(s.amplitudes().squaredNorm(), 1.0, 1e-12);
    EXPECT_THROW(PureState::normalized(ComplexVector::Zero(3)), std::invalid_argument);
    EXPECT_THROW(PureState{ComplexVector(0)}, InvalidDimension);
}

TEST(pure_state, tensor_power_layout) {
    ComplexVector v(2);
    v << 0.6, Complex(0.0, 0.8);
    PureState s(v);
    ComplexVector t = s.tensor_power(2);
    ASSERT_EQ(t.size(), 4);
    // Index 1 is |0>|1>, first factor most significant.
    EXPECT_NEAR(std::abs(t(1) - Complex(0.0, 0.48)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(t(3) - Complex(-0.64, 0.0)), 0.0, 1e-15);
    EXPECT_EQ(s.tensor_power(0).size(), 1);
}

TEST(density_matrix, validation) {
    EXPECT_NO_THROW(DensityMatrix::maximally_mixed(3));
    ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
    EXPECT_THROW(DensityMatrix{bad}, std::invalid_argument);
    ComplexMatrix neg(2, 2);
    neg << 1.5, 0.0, 0.0, -0.5;
    EXPECT_THROW(DensityMatrix{neg}, std::invalid_argument);
    ComplexMatrix nonherm(2, 2);
    nonherm << 0.5, 0.1, 0.0, 0.5;
    EXPECT_THROW(DensityMatrix{nonherm}, std::invalid_argument);
}

TEST(density_matrix, purity) {
    EXPECT_NEAR(DensityMatrix::maximally_mixed(4).purity(), 0.25, 1e-14);
    auto p = DensityMatrix::from_pure(PureState::basis(3, 1));
    EXPECT_TRUE(p.is_pure());
    EXPECT_FALSE(DensityMatrix::maximally_mixed(2).is_pure());
}

TEST(predicates, hermitian_unitary_psd) {
    ComplexMatrix h(2, 2);
    h << 1.0, Complex(0, 1), Complex(0, -1), 1.0;
    EXPECT_TRUE(is_hermitian(h));
    EXPECT_TRUE(is_psd(h));
    ComplexMatrix x(2, 2);
    x << 0.0, 1.0, 1.0, 0.0;
    EXPECT_TRUE(is_unitary(x));
    EXPECT_FALSE(is_psd(x));
    EXPECT_FALSE(is_unitary(h));
}
