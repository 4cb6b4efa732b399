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

#include "dqipe/symmetric/channels.h"

#include <gtest/gtest.h>

#include <cmath>

#include "dqipe/linalg/measures.h"
#include "dqipe/linalg/random_states.h"
#include "dqipe/linalg/tensor.h"
#include "dqipe/symmetric/sym_basis.h"

using namespace dqipe;

namespace {

DensityMatrix random_symmetric_pure(std::size_t d, std::size_t k, RngStream &rng) {
    ComplexMatrix p = sym_projector(d, k);
    ComplexVector v = p * sample_haar_state(p.rows(), rng).amplitudes();
    return DensityMatrix::from_pure(PureState::normalized(v));
}

DensityMatrix random_symmetric_mixed(std::size_t d, std::size_t k, RngStream &rng) {
    ComplexMatrix acc = ComplexMatrix::Zero(checked_pow(d, k), checked_pow(d, k));
    for (int i = 0; i < 3; i++) {
        acc += rng.uniform() * random_symmetric_pure(d, k, rng).matrix();
    }
    acc /= acc.trace().real();
    return DensityMatrix(0.5 * (acc + acc.adjoint()));
}

}  // namespace

TEST(mp_channel, fixes_sigma_m) {
    for (auto [d, k] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{2, 3}}) {
        auto s = maximally_mixed_sym(d, k);
        EXPECT_LT(max_abs_diff(mp_channel(s, d, k).matrix(), s.matrix()), 1e-9);
    }
}

TEST(mp_channel, dmax_bound) {
    RngStream rng(1);
    for (auto [d, k] : {std::pair{4, 1}, std::pair{4, 2}, std::pair{6, 2}}) {
        auto sm = maximally_mixed_sym(d, k);
        double bound = double(k * k) / d;
        for (int i = 0; i < 10; i++) {
            auto out = mp_channel(random_symmetric_pure(d, k, rng), d, k);
            ComplexMatrix gap = out.matrix() - std::exp(-bound) * sm.matrix();
            EXPECT_GE(hermitian_eigenvalues(gap)(0), -1e-10);
            EXPECT_LE(dmax(sm, out), bound + 1e-6);
        }
    }
}

TEST(mp_channel, biased_toward_input) {
    RngStream rng(2);
    PureState phi = sample_haar_state(3, rng);
    ComplexVector v = phi.tensor_power(2);
    auto out = mp_channel(DensityMatrix::from_pure(PureState(v)), 3, 2);
    double own = v.dot(out.matrix() * v).real();
    ComplexMatrix p = sym_projector(3, 2);
    for (int i = 0; i < 50; i++) {
        ComplexVector w = (p * sample_haar_state(9, rng).amplitudes()).normalized();
        EXPECT_GT(own, w.dot(out.matrix() * w).real());
    }
}

TEST(mp_channel, projects_nonsymmetric_input) {
    // |01><01| has half its weight on the antisymmetric part.
    ComplexMatrix t = ComplexMatrix::Zero(4, 4);
    t(1, 1) = 1.0;
    auto out = mp_channel(DensityMatrix(t), 2, 2);
    EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_THROW(mp_channel(DensityMatrix::maximally_mixed(9), 4, 2), DimensionMismatch);
    EXPECT_THROW(mp_channel(DensityMatrix::maximally_mixed(1000), 10, 3), DenseBudgetExceeded);
}

TEST(clone_channel, endpoints) {
    RngStream rng(3);
    ComplexMatrix one = ComplexMatrix::Ones(1, 1);
    auto s0 = clone_channel(DensityMatrix(one), 3, 0, 2);
    EXPECT_LT(max_abs_diff(s0.matrix(), maximally_mixed_sym(3, 2).matrix()), 1e-12);
    auto rho = random_symmetric_mixed(3, 2, rng);
    EXPECT_LT(max_abs_diff(clone_channel(rho, 3, 2, 2).matrix(), rho.matrix()), 1e-12);
}

TEST(clone_channel, chiribella_decomposition) {
    RngStream rng(4);
    const std::size_t d = 3, k = 2;
    double wsum = 0;
    for (std::size_t s = 0; s <= k; s++) {
        wsum += mp_clone_weight(d, k, s);
    }
    EXPECT_NEAR(wsum, 1.0, 1e-14);
    for (int i = 0; i < 10; i++) {
        auto rho = random_symmetric_mixed(d, k, rng);
        ComplexMatrix mix = ComplexMatrix::Zero(9, 9);
        for (std::size_t s = 0; s <= k; s++) {
            DensityMatrix reduced(partial_trace_last(rho.matrix(), d, k, k - s));
            mix += mp_clone_weight(d, k, s) * clone_channel(reduced, d, s, k).matrix();
        }
        EXPECT_LT(max_abs_diff(mix, mp_channel(rho, d, k).matrix()), 1e-8);
    }
}
