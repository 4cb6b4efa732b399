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
#include <span>

#include "dqipe/linalg/types.h"

namespace dqipe {

/// d^k, throwing DenseBudgetExceeded (mentioning `op`) when it exceeds `budget`.
std::size_t dense_power(std::size_t d, std::size_t k, const char *op, std::uint64_t budget = kDenseBudget);

/// d^k without a budget check; throws std::overflow_error past 64 bits.
std::uint64_t checked_pow(std::uint64_t d, std::uint64_t k);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector kron(const ComplexVector &a, const ComplexVector &b);

/// Applies v^{\otimes k} to a vector on (C^d)^{\otimes k} in O(k d^{k+1}).
ComplexVector apply_on_each_factor(const ComplexMatrix &v, const ComplexVector &x, std::size_t d, std::size_t k);

/// Traces out the last `traced` of `factors` tensor factors of C^d.
ComplexMatrix partial_trace_last(const ComplexMatrix &m, std::size_t d, std::size_t factors, std::size_t traced);

/// Splits a flat index into k base-d digits, most significant first.
void index_to_digits(std::size_t index, std::size_t d, std::span<std::size_t> digits);
std::size_t digits_to_index(std::span<const std::size_t> digits, std::size_t d);

}  // namespace dqipe
