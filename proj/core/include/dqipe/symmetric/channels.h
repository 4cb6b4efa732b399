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

/// Measure-and-prepare channel: measure tau with the standard POVM on k copies
/// and output u^{\otimes k}.
///
/// Evaluated as C(d+k-1,k)/C(d+2k-1,2k) Tr_{first k}[(tau (x) I) P_sym(d, 2k)],
/// with P_sym(d, 2k) kept as its type classes. A tau with weight outside the
/// symmetric subspace is projected onto it (and renormalized) after a warning
/// on stderr. Needs d^{2k} within the dense budget.
DensityMatrix mp_channel(const DensityMatrix &tau, std::size_t d, std::size_t k);

/// Optimal s -> k cloner: C(d+s-1,s)/C(d+k-1,k) P_sym (rho (x) I^{(k-s)}) P_sym.
/// rho acts on (C^d)^{\otimes s}; s = 0 takes the 1x1 matrix [1].
DensityMatrix clone_channel(const DensityMatrix &rho, std::size_t d, std::size_t s, std::size_t k);

/// Weight C(k,s) C(d+k-1,k-s) / C(d+2k-1,k) of Clone_{s->k} in the convex
/// decomposition of the measure-and-prepare channel.
double mp_clone_weight(std::size_t d, std::size_t k, std::size_t s);

}  // namespace dqipe
