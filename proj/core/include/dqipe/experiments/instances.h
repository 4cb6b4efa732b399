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

#pragma once

#include <cstddef>
#include <utility>

#include "dqipe/estimators/multicopy.h"
#include "dqipe/linalg/rng.h"
#include "dqipe/linalg/types.h"

namespace dqipe::experiments {

/// case 1: (phi, phi) with phi Haar; case 2: independent Haar (phi, psi).
std::pair<PureState, PureState> gen_dipe_instance(std::size_t d, DipeCase which, RngStream &rng);

/// States in C^{d+1}: sqrt(1-eps) e^{i theta} |0> + sqrt(eps) |phi>, with phi
/// Haar on span{e_1..e_d}. Bob uses an independent phase theta', and in case 2
/// also an independent phi.
std::pair<PureState, PureState> gen_problem1_instance(std::size_t d, double eps, DipeCase which, RngStream &rng);

/// (psi_0, |0>) when `plus` is false, (psi_1, |0>) when true, with
/// psi_0 = sqrt(1/2 - eps)|0> + sqrt(1/2 + eps)|1> and psi_1 its coefficient swap.
std::pair<PureState, PureState> gen_swaplb_instance(double eps, bool plus);

struct TruncatedBinomial {
    std::size_t t = 0;
    /// t exceeded m_cap; the caller falls back to |0>^{(x)k}.
    bool overflow = false;
};

/// t ~ Binomial(k, eps), flagged when t > m_cap.
TruncatedBinomial sample_truncated_binomial(std::size_t k, double eps, std::size_t m_cap, RngStream &rng);

}  // namespace dqipe::experiments
