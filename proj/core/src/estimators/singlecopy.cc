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

#include "dqipe/estimators/singlecopy.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "dqipe/linalg/random_states.h"

namespace dqipe {

RealVector born_probabilities(const DensityMatrix &rho, const ComplexMatrix &u) {
    if (u.rows() != u.cols() || static_cast<std::size_t>(u.rows()) != rho.dim()) {
        throw DimensionMismatch("born_probabilities: U must be d x d");
    }
    ComplexMatrix rotated = u * rho.matrix() * u.adjoint();
    RealVector p = rotated.diagonal().real().cwiseMax(0.0);
    if (std::abs(p.sum() - 1.0) > 1e-8) {
        throw std::logic_error("born_probabilities: outcome probabilities do not sum to 1");
    }
    return p;
}

Outcomes born_sample(const DensityMatrix &rho, const ComplexMatrix &u, std::size_t m, RngStream &rng) {
    RealVector p = born_probabilities(rho, u);
    std::discrete_distribution<std::uint32_t> law(p.data(), p.data() + p.size());
    Outcomes out(m);
    for (auto &o : out) {
        o = law(rng);
    }
    return out;
}

double classical_collision(const CollisionSamples &s) {
    if (s.x.size() != s.y.size() || s.x.empty()) {
        throw std::invalid_argument("classical_collision: X and Y must have the same positive length");
    }
    std::vector<std::uint64_t> cx(s.d, 0), cy(s.d, 0);
    for (auto v : s.x) {
        cx.at(v)++;
    }
    for (auto v : s.y) {
        cy.at(v)++;
    }
    std::uint64_t hits = 0;
    for (std::size_t b = 0; b < s.d; b++) {
        hits += cx[b] * cy[b];
    }
    double m = double(s.x.size());
    return double(hits) / (m * m);
}

namespace {

void require_distribution(const RealVector &p, const char *what) {
    if ((p.array() < -1e-12).any() || std::abs(p.sum() - 1.0) > 1e-8) {
        throw std::invalid_argument(std::string(what) + ": not a probability vector");
    }
}

struct CollisionSums {
    double g, pq2, p2q;
};

CollisionSums collision_sums(const RealVector &p, const RealVector &q, const char *what) {
    require_distribution(p, what);
    require_distribution(q, what);
    require_same_dim(static_cast<std::size_t>(p.size()), static_cast<std::size_t>(q.size()), what);
    return {p.dot(q), p.dot(q.cwiseAbs2()), p.cwiseAbs2().dot(q)};
}

}  // namespace

double collision_variance_bound(const RealVector &p, const RealVector &q, std::size_t m) {
    auto s = collision_sums(p, q, "collision_variance_bound");
    double mm = double(m);
    return s.g / (mm * mm) + (s.pq2 + s.p2q) / mm;
}

double collision_variance_exact(const RealVector &p, const RealVector &q, std::size_t m) {
    auto s = collision_sums(p, q, "collision_variance_exact");
    double mm = double(m);
    double m2 = mm * mm;
    return (m2 * s.g + m2 * (mm - 1) * (mm - 1) * s.g * s.g + m2 * (mm - 1) * (s.pq2 + s.p2q)) / (m2 * m2) -
           s.g * s.g;
}

ComplexMatrix shared_basis(std::size_t d, const RngStream &shared, std::size_t i) {
    RngStream r = shared.child(i);
    return sample_haar_unitary(d, r);
}

EstimateRecord singlecopy_from_outcomes(std::size_t d, const std::vector<Outcomes> &alice,
                                        const std::vector<Outcomes> &bob) {
    if (alice.size() != bob.size() || alice.empty()) {
        throw std::invalid_argument("singlecopy_from_outcomes: need the same positive number of bases");
    }
    EstimateRecord r;
    r.d = d;
    r.n_bases = alice.size();
    r.m = alice.front().size();
    double wsum = 0.0, gsum = 0.0;
    for (std::size_t i = 0; i < alice.size(); i++) {
        double g = classical_collision({d, alice[i], bob[i]});
        r.per_basis.push_back(g);
        gsum += g;
        wsum += (double(d) + 1.0) * g - 1.0;
    }
    r.w = wsum / double(alice.size());
    r.raw = gsum / double(alice.size());
    r.k = r.n_bases * r.m;
    return r;
}

EstimateRecord singlecopy_estimate(const DensityMatrix &rho, const DensityMatrix &sigma, std::size_t n_bases,
                                   std::size_t m, const RngStream &rng) {
    require_same_dim(rho.dim(), sigma.dim(), "singlecopy_estimate");
    if (n_bases == 0 || m == 0) {
        throw std::invalid_argument("singlecopy_estimate: N and m must be positive");
    }
    std::size_t d = rho.dim();
    RngStream shared = rng.child(streams::kShared);
    RngStream alice = rng.child(streams::kAlice);
    RngStream bob = rng.child(streams::kBob);
    std::vector<Outcomes> xs, ys;
    for (std::size_t i = 0; i < n_bases; i++) {
        ComplexMatrix u = shared_basis(d, shared, i);
        xs.push_back(born_sample(rho, u, m, alice));
        ys.push_back(born_sample(sigma, u, m, bob));
    }
    EstimateRecord r = singlecopy_from_outcomes(d, xs, ys);
    r.seed = rng.seed();
    r.path = rng.path();
    return r;
}

double singlecopy_variance_exact_pure(double d, double m, double f) {
    double a = 1.0 + f, b = 1.0 - f;
    double haar = (d * d * a * a - d * (6.0 - f) * f + d + 2.0 * b * b) /
                  (d * (d + 1) * (d + 1) * (d + 2) * (d + 3));
    double sampling = a / ((d + 1) * m * m) + (m - 1) / (m * m) * (4.0 + 8.0 * f) / ((d + 1) * (d + 2)) -
                      (2 * m - 1) / (m * m) * (d * d * a * a + 5 * d * a * a + 2 * b * b) /
                          (d * (d + 1) * (d + 2) * (d + 3));
    return haar + sampling;
}

double singlecopy_variance_scale(double d, double m) {
    return 1.0 / (d * d * d) + 1.0 / (m * m * d) + 1.0 / (m * d * d);
}

}  // namespace dqipe
