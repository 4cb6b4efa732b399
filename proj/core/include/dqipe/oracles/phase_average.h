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

namespace dqipe::oracles {

struct PhaseAverage {
    double lhs;
    double rhs;
};

/// lhs: grid x grid lattice average over (theta, phi) of
/// |e^{i(phi-theta)} q + e^{i phi} g + e^{-i theta} h + l|^4.
/// rhs: |q|^4+|g|^4+|h|^4+|l|^4 + 4(|g|^2|h|^2 + |l|^2|g|^2 + |l|^2|h|^2 +
/// |q|^2|g|^2 + |q|^2|h|^2 + |q|^2|l|^2 + q l g* h* + g h q* l*).
/// The integrand is a trigonometric polynomial of degree 2 per angle, so any
/// grid >= 64 reproduces the integral to rounding.
PhaseAverage phase_average_identity(Complex q, Complex g, Complex h, Complex l, std::size_t grid = 256);

/// theta-grid average of |x><x|^{\otimes k} with x = sqrt(1-eps) e^{i theta}|0> + sqrt(eps) phi.
ComplexMatrix phase_averaged_power(const PureState &phi, double eps, std::size_t k, std::size_t grid = 256);

}  // namespace dqipe::oracles
