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

namespace dqipe {

/// (1/sqrt C(k,t)) sum_{|S|=t} |0>_{S^c} |phi>_S on (C^D)^{\otimes k}, D = phi.dim().
///
/// phi must be orthogonal to e_0 (within 1e-10). Subsets are summed in
/// lexicographic order of their sorted position lists.
PureState phi_t_state(const PureState &phi, std::size_t k, std::size_t t);

/// sum_t C(k,t) eps^t (1-eps)^{k-t} |phi_t><phi_t|: the phase average of
/// (sqrt(1-eps) e^{i theta}|0> + sqrt(eps)|phi>)^{\otimes k}.
DensityMatrix averaged_phase_state(const PureState &phi, double eps, std::size_t k);

}  // namespace dqipe
