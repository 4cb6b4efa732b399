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

/// rho_u = C(d+k-1,k)/C(d+2k-1,2k) (I (x) <u|^{\otimes k}) P_sym(d,2k) (I (x) |u>^{\otimes k}),
/// with P_sym(d,2k) summed over every permutation of 2k factors.
/// Refuses d^{2k} above the dense budget or (2k)! d^{2k} above 1e8.
DensityMatrix rho_u_numeric(const PureState &u, std::size_t k);

}  // namespace dqipe::oracles
