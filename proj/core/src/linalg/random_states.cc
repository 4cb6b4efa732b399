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

#include "dqipe/linalg/random_states.h"

#include <cmath>
#include <stdexcept>

namespace dqipe {

PureState sample_haar_state(std::size_t d, RngStream &rng) {
    if (d == 0) {
        throw InvalidDimension("sample_haar_state: d must be positive");
    }
    ComplexVector z(static_cast<Eigen::Index>(d));
    for (Eigen::Index i = 0; i < z.size(); i++) {
        z(i) = rng.complex_normal();
    }
    return PureState::normalized(std::move(z));
}

ComplexMatrix sample_haar_unitary(std::size_t d, RngStream &rng) {
    if (d == 0) {
        throw InvalidDimension("sample_haar_unitary: d must be positive");
    }
    auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix z(n, n);
    for (Eigen::Index c = 0; c < n; c++) {
        for (Eigen::Index r = 0; r < n; r++) {
            z(r, c) = rng.complex_normal();
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const ComplexMatrix &r = qr.matrixQR();
    for (Eigen::Index c = 0; c < n; c++) {
        Complex diag = r(c, c);
        double mag = std::abs(diag);
        Complex ph = mag > 0.0 ? diag / mag : Complex(1.0);
        q.col(c) *= ph;
    }
    return q;
}

PureState sample_haar_orthogonal_to(const PureState &phi, RngStream &rng) {
    if (phi.dim() < 2) {
        throw InvalidDimension("sample_haar_orthogonal_to: the complement of phi is empty for d = 1");
    }
    const ComplexVector &a = phi.amplitudes();
    for (;;) {
        ComplexVector z(a.size());
        for (Eigen::Index i = 0; i < z.size(); i++) {
            z(i) = rng.complex_normal();
        }
        z -= a * a.dot(z);
        double n = z.norm();
        // Projected Gaussian norms this small have probability ~0; redraw.
        if (n > 1e-8) {
            z /= n;
            // One more projection pass removes the O(eps) residual overlap.
            z -= a * a.dot(z);
            return PureState::normalized(std::move(z));
        }
    }
}

double sample_beta(double a, double b, RngStream &rng) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("sample_beta: parameters must be positive");
    }
    for (;;) {
        double x = rng.gamma(a);
        double y = rng.gamma(b);
        double s = x + y;
        if (s > 0.0) {
            return x / s;
        }
    }
}

}  // namespace dqipe
