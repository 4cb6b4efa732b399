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

// Cross-module checks: closed forms in one module against independent
// constructions in another.

#include <gtest/gtest.h>

#include <cmath>

#include "dqipe/estimators/singlecopy.h"
#include "dqipe/estimators/swap.h"
#include "dqipe/linalg/measures.h"
#include "dqipe/linalg/random_states.h"
#include "dqipe/oracles/collision.h"
#include "dqipe/oracles/haar_moments.h"
#include "dqipe/oracles/rho_u_numeric.h"
#include "dqipe/symmetric/block_spectrum.h"
#include "dqipe/symmetric/sym_basis.h"

using namespace dqipe;

namespace {

RealVector random_distribution(std::size_t d, RngStream &rng) {
    RealVector p(static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; i++) {
        p(Eigen::Index(i)) = rng.uniform() + 0.05;
    }
    return p / p.sum();
}

}  // namespace

TEST(CrossModule, RhoUClosedFormMatchesNumericIntegration) {
    RngStream rng(11);
    for (auto [d, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
        PureState u = sample_haar_state(d, rng);
        double err = max_abs_diff(rho_u_closed_form(u, k).matrix(), oracles::rho_u_numeric(u, k).matrix());
        EXPECT_LE(err, 1e-9) << "d=" << d << " k=" << k;
    }
}

TEST(CrossModule, DenseTraceDistanceMatchesBlockFormula) {
    RngStream rng(12);
    for (auto [d, k] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {3, 2}, {2, 4}, {4, 3}}) {
        PureState u = sample_haar_state(d, rng);
        double dense = trace_distance(rho_u_closed_form(u, k), maximally_mixed_sym(d, k));
        EXPECT_NEAR(dense, trace_distance_rho_u_block(d, k), 1e-9) << "d=" << d << " k=" << k;
    }
}

TEST(CrossModule, ExhaustiveCollisionMatchesClosedForm) {
    RngStream rng(13);
    for (std::size_t d : {2, 3}) {
        for (std::size_t m : {1, 2, 3}) {
            RealVector p = random_distribution(d, rng), q = random_distribution(d, rng);
            EXPECT_NEAR(oracles::exhaustive_collision_mean(p, q, m), p.dot(q), 1e-14);
            double exact = oracles::exhaustive_collision_variance(p, q, m);
            EXPECT_NEAR(collision_variance_exact(p, q, m), exact, 1e-14) << "d=" << d << " m=" << m;
            EXPECT_GE(collision_variance_bound(p, q, m) - exact, -1e-15);
        }
    }
}

TEST(CrossModule, HaarBasisCollisionMeanFromMomentOracle) {
    // Averaging sum_b p_b q_b over a Haar basis is d times a second Haar moment.
    RngStream rng(14);
    for (std::size_t d : {2, 3, 5}) {
        for (double f : {0.0, 0.3, 1.0}) {
            auto [phi, psi] = make_state_pair(d, f, rng);
            oracles::MomentSpec spec{{DensityMatrix::from_pure(phi).matrix(), DensityMatrix::from_pure(psi).matrix()}};
            EXPECT_NEAR(double(d) * oracles::haar_moment_exact(spec), (1.0 + f) / double(d + 1), 1e-12);
        }
    }
}

TEST(CrossModule, PerpFourthMomentMatchesClosedForm) {
    RngStream rng(15);
    for (std::size_t d : {3, 4, 6}) {
        for (double f : {0.0, 0.25, 0.9}) {
            auto [a, b] = make_state_pair(d, f, rng);
            ComplexMatrix bb = DensityMatrix::from_pure(b).matrix();
            double dd = double(d);
            EXPECT_NEAR(oracles::perp_moment_exact(a, {bb, bb}), 2.0 * (1 - f) * (1 - f) / (dd * (dd - 1)), 1e-12);
            EXPECT_NEAR(oracles::perp_moment_exact(a, {bb}), (1 - f) / (dd - 1), 1e-12);
        }
    }
}

TEST(CrossModule, SingleCopyVarianceFormulaAgainstSimulation) {
    // Var(w_i) over Haar bases at small size against the pure-state formula.
    const std::size_t d = 3, m = 4, n = 200000;
    RngStream inst(16);
    auto [phi, psi] = make_state_pair(d, 0.5, inst);
    DensityMatrix rho = DensityMatrix::from_pure(phi), sigma = DensityMatrix::from_pure(psi);
    double s = 0, s2 = 0;
    for (std::size_t i = 0; i < n; i++) {
        double w = singlecopy_estimate(rho, sigma, 1, m, RngStream(16, {i})).w;
        s += w;
        s2 += w * w;
    }
    double mean = s / double(n);
    double var = (s2 - double(n) * mean * mean) / double(n - 1);
    double exact = double((d + 1) * (d + 1)) * singlecopy_variance_exact_pure(double(d), double(m), 0.5);
    EXPECT_NEAR(mean, 0.5, 3.5 * std::sqrt(var / double(n)));
    EXPECT_NEAR(var / exact, 1.0, 0.03);
}
