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

#include "dqipe/linalg/types.h"

namespace dqipe::oracles {

/// Var of (1/m^2) sum_{j,l} [x_j = y_l] for x ~ p^m, y ~ q^m, obtained by
/// enumerating every outcome tuple on each side. Needs d^m <= 1e6.
double exhaustive_collision_variance(const RealVector &p, const RealVector &q, std::size_t m);

/// The matching exact mean, sum_b p_b q_b, from the same enumeration.
double exhaustive_collision_mean(const RealVector &p, const RealVector &q, std::size_t m);

}  // namespace dqipe::oracles
