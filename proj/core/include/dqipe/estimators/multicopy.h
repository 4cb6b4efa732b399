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

#include "dqipe/estimators/record.h"
#include "dqipe/linalg/rng.h"
#include "dqipe/linalg/types.h"

namespace dqipe {

/// E|<u|v>|^2 = A + B f for the two standard-POVM outcomes.
struct MultiCopyConstants {
    std::size_t d;
    std::size_t k;
    double A;
    double B;

    static MultiCopyConstants make(std::size_t d, std::size_t k);
    /// (x - A) / B.
    double estimate(double overlap) const;
};

/// Thrown when a multi-copy routine is handed a mixed state.
struct MixedStateRejected : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// w = ((d+k)^2/k^2) x - (d+2k)/k^2 from the outcomes' overlap x.
double multicopy_from_overlap(std::size_t d, std::size_t k, double overlap);

/// Multi-copy estimator. Alice measures phi^{\otimes k} and Bob psi^{\otimes k} with the
/// standard POVM, using rng.child(streams::kAlice) and rng.child(streams::kBob).
EstimateRecord multicopy_estimate(const PureState &phi, const PureState &psi, std::size_t k, const RngStream &rng);

/// Accepts density matrices but throws MixedStateRejected unless both are pure.
EstimateRecord multicopy_estimate(const DensityMatrix &rho, const DensityMatrix &sigma, std::size_t k,
                                  const RngStream &rng);

/// Exact Var(w) for pure inputs with overlap f.
double multicopy_variance_exact(double d, double k, double f);

/// The relaxation (4f-2f^2)/k + (2df+f^2+4)/k^2 + (4d+4)/k^3 + (d^2+2d)/k^4.
double multicopy_variance_bound(double d, double k, double f);

enum class DipeCase { same = 1, independent = 2 };

/// Case 2 iff |<u|v>|^2 <= 10/d.
DipeCase dipe_decide_threshold(const PureState &u, const PureState &v, std::size_t d);

/// Bob's two-outcome measurement {Pi_u^0, P_sym - Pi_u^0} on psi^{\otimes k},
/// sampled from its outcome law: Pi_u^0 (case 2) has probability (1-|<u|psi>|^2)^k.
DipeCase dipe_decide_pi0(const PureState &u, const PureState &psi, std::size_t k, RngStream &rng);

}  // namespace dqipe
