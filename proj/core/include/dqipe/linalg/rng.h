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

#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "dqipe/linalg/types.h"

namespace dqipe {

/// Deterministic random stream addressed by (seed, stream-path).
///
/// The engine state is derived from a hash of the seed and the full path, so
/// `child(i)` of a stream is independent of how many draws the parent has
/// already consumed. Trials, parties and rounds each extend the path by one
/// index, which gives every actor its own reproducible stream regardless of
/// execution order.
class RngStream {
   public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t seed, std::vector<std::uint64_t> path = {});

    RngStream child(std::uint64_t index) const;

    std::uint64_t seed() const {
        return seed_;
    }
    const std::vector<std::uint64_t> &path() const {
        return path_;
    }
    /// 64-bit digest of (seed, path). Also used as a seed commitment on the wire.
    std::uint64_t key() const {
        return key_;
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }
    result_type operator()();

    /// Uniform on [0, 1).
    double uniform();
    /// Uniform on [0, 2 pi).
    double phase();
    double normal();
    /// Standard complex normal (E|z|^2 = 1).
    Complex complex_normal();
    double gamma(double shape);
    bool bernoulli(double p);

   private:
    std::uint64_t seed_;
    std::vector<std::uint64_t> path_;
    std::uint64_t key_;
    std::array<std::uint64_t, 4> s_;
    std::normal_distribution<double> normal_;
};

/// splitmix64 finalizer; exposed for hashing seeds into commitments.
std::uint64_t mix64(std::uint64_t x);

}  // namespace dqipe
