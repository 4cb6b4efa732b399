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
#include <vector>

namespace dqipe::experiments {

struct Moments {
    std::size_t count = 0;
    double mean = 0.0;
    /// Unbiased sample variance (n - 1 denominator); 0 for fewer than 2 values.
    double variance = 0.0;
    /// sqrt(variance / count).
    double se = 0.0;
};

/// Two-pass mean and variance, summed in index order.
Moments moments(const std::vector<double> &xs);

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Wilson score interval for `successes` out of `n` at normal quantile z
/// (1.959964 for 95%).
Interval wilson_interval(std::size_t successes, std::size_t n, double z = 1.959963984540054);

/// Linear-interpolation quantile (type 7) of a copy of xs.
double quantile(std::vector<double> xs, double q);

}  // namespace dqipe::experiments
