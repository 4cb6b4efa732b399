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

#include "dqipe/estimators/record.h"
#include "dqipe/linalg/rng.h"
#include "dqipe/linalg/types.h"

namespace dqipe {

/// k SWAP tests on copies with overlap f: each outputs 0 with probability
/// (1+f)/2. Returns f~ = 1 - 2 (fraction of 1 outcomes) in w.
EstimateRecord swap_test(double f, std::size_t k, RngStream &rng);

/// (1 - f^2)/k.
double swap_test_variance(double f, std::size_t k);

/// 1/k^2 + ((k-1)/k^2)(Tr rho^2 sigma + Tr rho sigma^2) - ((2k-1)/k^2) f^2.
double generalized_swap_variance(const DensityMatrix &rho, const DensityMatrix &sigma, std::size_t k);

/// (phi, psi) with phi Haar and psi = sqrt(f) phi + sqrt(1-f) phi_perp.
std::pair<PureState, PureState> make_state_pair(std::size_t d, double f, RngStream &rng);

}  // namespace dqipe
