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

#include "dqipe/linalg/types.h"

namespace dqipe {

/// |<a|b>|^2.
double overlap2(const PureState &a, const PureState &b);

/// Tr(rho sigma). Real part only; the imaginary part vanishes for Hermitian inputs.
double trace_inner(const DensityMatrix &rho, const DensityMatrix &sigma);

/// (1/2) sum |lambda_i(rho - sigma)|.
double trace_distance(const ComplexMatrix &rho, const ComplexMatrix &sigma);
double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma);

/// Max-relative entropy D_max(rho || sigma) = inf{lambda : rho <= e^lambda sigma}.
///
/// Computed as log lambda_max(S^{-1/2} rho S^{-1/2}) on the support of sigma,
/// with eigenvalues above 1e-9 counting as support. Returns +infinity when rho
/// has weight outside that support. Inputs may be unnormalized, but must be
/// PSD within 1e-9 (std::invalid_argument otherwise).
double dmax(const ComplexMatrix &rho, const ComplexMatrix &sigma);
double dmax(const DensityMatrix &rho, const DensityMatrix &sigma);

}  // namespace dqipe
