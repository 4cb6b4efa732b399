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

#include <cmath>

#include "dqipe/linalg/measures.h"
#include "dqipe/symmetric/povm.h"

namespace dqipe {

MultiCopyConstants MultiCopyConstants::make(std::size_t d, std::size_t k) {
    if (k == 0) {
        throw std::invalid_argument("MultiCopyConstants: k must be positive");
    }
    double dd = double(d), kk = double(k);
    double s = (dd + kk) * (dd + kk);
    return {d, k, (dd + 2 * kk) / s, kk * kk / s};
}

double MultiCopyConstants::estimate(double overlap) const {
    return (overlap - A) / B;
}

double multicopy_from_overlap(std::size_t d, std::size_t k, double overlap) {
    if (k == 0) {
        throw std::invalid_argument("multicopy_from_overlap: k must be positive");
    }
    double dd = double(d), kk = double(k);
    return (dd + kk) * (dd + kk) / (kk * kk) * overlap - (dd + 2 * kk) / (kk * kk);
}

EstimateRecord multicopy_estimate(const PureState &phi, const PureState &psi, std::size_t k, const RngStream &rng) {
    require_same_dim(phi.dim(), psi.dim(), "multicopy_estimate");
    if (k == 0) {
        throw std::invalid_argument("multicopy_estimate: k must be positive");
    }
    RngStream alice = rng.child(streams::kAlice);
    RngStream bob = rng.child(streams::kBob);
    PovmSample u = standard_povm_sample(phi, k, alice);
    PovmSample v = standard_povm_sample(psi, k, bob);
    EstimateRecord r;
    r.d = phi.dim();
    r.k = k;
    r.raw = overlap2(u.u, v.u);
    r.w = multicopy_from_overlap(r.d, k, r.raw);
    r.seed = rng.seed();
    r.path = rng.path();
    r.degenerate = u.degenerate || v.degenerate;
    return r;
}

namespace {

PureState require_pure(const DensityMatrix &rho) {
    if (!rho.is_pure(1e-9)) {
        throw MixedStateRejected("multicopy_estimate: the standard POVM estimator needs pure inputs");
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(rho.matrix());
    return PureState::normalized(eig.eigenvectors().col(eig.eigenvectors().cols() - 1));
}

}  // namespace

EstimateRecord multicopy_estimate(const DensityMatrix &rho, const DensityMatrix &sigma, std::size_t k,
                                  const RngStream &rng) {
    return multicopy_estimate(require_pure(rho), require_pure(sigma), k, rng);
}

double multicopy_variance_exact(double d, double k, double f) {
    double g = 1.0 - f;
    double k1 = k + 1, k2 = k + 2;
    double bracket = k2 * k2 * k1 * k1 * f * f + 4 * k1 * k2 * g * g + 2 * (d - 2 + f) * (d - 2 + f) +
                     2 * (d - 2 + f * f) + 4 * k1 * k1 * g * g + 8 * k1 * g * (d + 2 * f - 2) +
                     8 * k1 * k1 * k2 * f * g + 4 * k1 * k1 * f * (d - 2 + f) + 8 * k1 * k1 * (f * f - f);
    double pre = (d + k) * (d + k) / ((d + k + 1) * (d + k + 1));
    double k4 = k * k * k * k;
    return pre * bracket / k4 - (d + 2 * k) * (d + 2 * k) / k4 - 2 * (d + 2 * k) * f / (k * k) - f * f;
}

double multicopy_variance_bound(double d, double k, double f) {
    return (4 * f - 2 * f * f) / k + (2 * d * f + f * f + 4) / (k * k) + (4 * d + 4) / (k * k * k) +
           (d * d + 2 * d) / (k * k * k * k);
}

DipeCase dipe_decide_threshold(const PureState &u, const PureState &v, std::size_t d) {
    return overlap2(u, v) <= 10.0 / double(d) ? DipeCase::independent : DipeCase::same;
}

DipeCase dipe_decide_pi0(const PureState &u, const PureState &psi, std::size_t k, RngStream &rng) {
    double p0 = std::pow(1.0 - overlap2(u, psi), double(k));
    return rng.bernoulli(p0) ? DipeCase::independent : DipeCase::same;
}

}  // namespace dqipe
