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
#include "dqipe/protocol/runner.h"

namespace dqipe::protocol {

/// Multi-copy estimator under SMP: each party sends its standard-POVM outcome,
/// the referee returns w.
Protocol multicopy_smp(const PureState &phi, const PureState &psi, std::size_t k);

/// Collision estimator under SMP with shared randomness: each party sends its
/// N blocks of m outcomes, the referee returns w.
Protocol singlecopy_smp(const DensityMatrix &rho, const DensityMatrix &sigma, std::size_t n_bases, std::size_t m);

/// DIPE under SMP: outcomes u, v; referee labels case 2 iff |<u|v>|^2 <= 10/d.
Protocol dipe_threshold_smp(const PureState &phi, const PureState &psi, std::size_t k);

/// DIPE one-way: Alice sends u, Bob measures {Pi_u^0, P_sym - Pi_u^0} and
/// reports the label.
Protocol dipe_pi0_one_way(const PureState &phi, const PureState &psi, std::size_t k);

/// Interactive exchange: Alice sends u, Bob replies with |<u|v>|^2, Alice
/// reports the multi-copy estimate. Uses 2 of the allowed rounds.
Protocol overlap_interactive(const PureState &phi, const PureState &psi, std::size_t k, std::size_t max_rounds);

}  // namespace dqipe::protocol
