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

struct PovmSample {
    PureState u;
    /// |<phi|u>|^2 as drawn.
    double alpha2;
    /// True when d = 1, where the outcome is phi up to a random phase.
    bool degenerate = false;
};

/// One outcome of the standard POVM on phi^{\otimes k}.
///
/// Drawn directly from the outcome density C(d+k-1,k) |<phi|u>|^{2k} du:
/// alpha^2 ~ Beta(k+1, d-1), a uniform phase theta, and u' Haar in the
/// complement of phi give u = alpha e^{i theta} phi + sqrt(1-alpha^2) u'.
/// k = 0 yields a Haar-random u.
PovmSample standard_povm_sample(const PureState &phi, std::size_t k, RngStream &rng);

}  // namespace dqipe
