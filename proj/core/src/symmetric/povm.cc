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

#include "dqipe/symmetric/povm.h"

#include <cmath>
#include <complex>

#include "dqipe/linalg/random_states.h"

namespace dqipe {

PovmSample standard_povm_sample(const PureState &phi, std::size_t k, RngStream &rng) {
    std::size_t d = phi.dim();
    if (d == 1) {
        ComplexVector v = phi.amplitudes() * std::polar(1.0, rng.phase());
        return PovmSample{PureState::normalized(std::move(v)), 1.0, true};
    }
    double alpha2 = sample_beta(static_cast<double>(k) + 1.0, static_cast<double>(d) - 1.0, rng);
    double theta = rng.phase();
    PureState perp = sample_haar_orthogonal_to(phi, rng);
    ComplexVector u = std::polar(std::sqrt(alpha2), theta) * phi.amplitudes() +
                      std::sqrt(1.0 - alpha2) * perp.amplitudes();
    return PovmSample{PureState::normalized(std::move(u)), alpha2, false};
}

}  // namespace dqipe
