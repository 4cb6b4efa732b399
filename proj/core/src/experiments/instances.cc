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

#include "dqipe/experiments/instances.h"

#include <cmath>
#include <random>
#include <stdexcept>

#include "dqipe/linalg/random_states.h"

namespace dqipe::experiments {

std::pair<PureState, PureState> gen_dipe_instance(std::size_t d, DipeCase which, RngStream &rng) {
    if (d < 2) {
        throw InvalidDimension("gen_dipe_instance: d must be at least 2");
    }
    PureState phi = sample_haar_state(d, rng);
    if (which == DipeCase::same) {
        return {phi, phi};
    }
    return {phi, sample_haar_state(d, rng)};
}

namespace {

PureState lift(double eps, double theta, const PureState &phi) {
    ComplexVector v(phi.amplitudes().size() + 1);
    v(0) = std::sqrt(1.0 - eps) * std::polar(1.0, theta);
    v.tail(phi.amplitudes().size()) = std::sqrt(eps) * phi.amplitudes();
    return PureState::normalized(std::move(v));
}

}  // namespace

std::pair<PureState, PureState> gen_problem1_instance(std::size_t d, double eps, DipeCase which, RngStream &rng) {
    if (d < 2) {
        throw InvalidDimension("gen_problem1_instance: d must be at least 2");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("gen_problem1_instance: eps must lie in (0, 1)");
    }
    double theta = rng.phase();
    double theta_b = rng.phase();
    auto [phi, psi] = gen_dipe_instance(d, which, rng);
    return {lift(eps, theta, phi), lift(eps, theta_b, psi)};
}

std::pair<PureState, PureState> gen_swaplb_instance(double eps, bool plus) {
    if (!(eps > 0.0 && eps < 0.5)) {
        throw std::invalid_argument("gen_swaplb_instance: eps must lie in (0, 1/2)");
    }
    double lo = std::sqrt(0.5 - eps), hi = std::sqrt(0.5 + eps);
    ComplexVector a(2), zero(2);
    a << (plus ? hi : lo), (plus ? lo : hi);
    zero << 1.0, 0.0;
    return {PureState(std::move(a)), PureState(std::move(zero))};
}

TruncatedBinomial sample_truncated_binomial(std::size_t k, double eps, std::size_t m_cap, RngStream &rng) {
    if (!(eps >= 0.0 && eps < 1.0)) {
        throw std::invalid_argument("sample_truncated_binomial: eps must lie in [0, 1)");
    }
    std::binomial_distribution<std::size_t> b(k, eps);
    std::size_t t = b(rng);
    return {t, t > m_cap};
}

}  // namespace dqipe::experiments
