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

#include "dqipe/linalg/rng.h"
#include "dqipe/linalg/types.h"

namespace dqipe {

/// Haar-random unit vector in C^d: d i.i.d. standard complex Gaussians, normalized.
PureState sample_haar_state(std::size_t d, RngStream &rng);

/// Haar-random unitary via QR of a complex Ginibre matrix, with each column of
/// Q rephased so that the matching diagonal entry of R is real positive.
ComplexMatrix sample_haar_unitary(std::size_t d, RngStream &rng);

/// Haar-random unit vector in the orthogonal complement of `phi`.
/// Requires dim >= 2.
PureState sample_haar_orthogonal_to(const PureState &phi, RngStream &rng);

/// Beta(a, b) as G_a / (G_a + G_b) with independent Gamma draws.
double sample_beta(double a, double b, RngStream &rng);

}  // namespace dqipe
