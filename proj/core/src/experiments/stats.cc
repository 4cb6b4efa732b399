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

#include "dqipe/experiments/stats.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dqipe::experiments {

Moments moments(const std::vector<double> &xs) {
    Moments m;
    m.count = xs.size();
    if (xs.empty()) {
        return m;
    }
    double s = 0.0;
    for (double x : xs) {
        s += x;
    }
    m.mean = s / double(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) {
            ss += (x - m.mean) * (x - m.mean);
        }
        m.variance = ss / double(xs.size() - 1);
        m.se = std::sqrt(m.variance / double(xs.size()));
    }
    return m;
}

Interval wilson_interval(std::size_t successes, std::size_t n, double z) {
    if (successes > n) {
        throw std::invalid_argument("wilson_interval: more successes than trials");
    }
    if (n == 0) {
        return {0.0, 1.0};
    }
    double nn = double(n);
    double p = double(successes) / nn;
    double z2 = z * z;
    double denom = 1.0 + z2 / nn;
    double centre = (p + z2 / (2.0 * nn)) / denom;
    double half = z * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

double quantile(std::vector<double> xs, double q) {
    if (xs.empty()) {
        throw std::invalid_argument("quantile: empty sample");
    }
    std::sort(xs.begin(), xs.end());
    double h = q * double(xs.size() - 1);
    auto lo = static_cast<std::size_t>(std::floor(h));
    auto hi = std::min(lo + 1, xs.size() - 1);
    return xs[lo] + (h - double(lo)) * (xs[hi] - xs[lo]);
}

}  // namespace dqipe::experiments
