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

// Exact-integer helpers shared by the symmetric-subspace sources.

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace dqipe::detail {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// C(n, r) for r <= n; zero otherwise.
BigInt binomial(std::uint64_t n, std::uint64_t r);

/// (lo)(lo+1)...(lo+count-1); 1 when count = 0.
BigInt rising(std::uint64_t lo, std::uint64_t count);

double to_double(const BigRational &q);

}  // namespace dqipe::detail
