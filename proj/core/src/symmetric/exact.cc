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

#include "exact.h"

namespace dqipe::detail {

BigInt binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) {
        return 0;
    }
    r = std::min(r, n - r);
    BigInt out = 1;
    for (std::uint64_t i = 1; i <= r; i++) {
        out *= n - r + i;
        out /= i;
    }
    return out;
}

BigInt rising(std::uint64_t lo, std::uint64_t count) {
    BigInt out = 1;
    for (std::uint64_t i = 0; i < count; i++) {
        out *= lo + i;
    }
    return out;
}

double to_double(const BigRational &q) {
    return q.convert_to<double>();
}

}  // namespace dqipe::detail
