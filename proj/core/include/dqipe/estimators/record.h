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
#include <cstdint>
#include <vector>

namespace dqipe {

/// Sub-stream indices under a trial's RngStream. The direct estimators and the
/// protocol harness both derive party streams this way, which is what makes
/// their outputs bit-identical.
namespace streams {
inline constexpr std::uint64_t kAlice = 1;
inline constexpr std::uint64_t kBob = 2;
inline constexpr std::uint64_t kShared = 3;
inline constexpr std::uint64_t kReferee = 4;
// Instance generation (the states handed to the parties) in experiments.
inline constexpr std::uint64_t kInstance = 5;
}  // namespace streams

/// Output of one estimator run.
struct EstimateRecord {
    /// The estimate. Not clamped; it may leave [0, 1].
    double w = 0.0;
    /// |<u|v>|^2 for the multi-copy estimator, mean g~ for the single-copy one,
    /// the fraction of 1 outcomes for the SWAP test.
    double raw = 0.0;
    /// Per-basis collision estimates g~_i (single-copy only).
    std::vector<double> per_basis;
    std::size_t d = 0;
    std::size_t k = 0;
    std::size_t m = 0;
    std::size_t n_bases = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> path;
    bool degenerate = false;
};

/// w clipped to [0, 1], for display only.
double display_clamp(double w);

}  // namespace dqipe
