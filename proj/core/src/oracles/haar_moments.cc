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

#include "dqipe/oracles/haar_moments.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dqipe::oracles {

std::size_t MomentSpec::dim() const {
    return ops.empty() ? 0 : static_cast<std::size_t>(ops.front().rows());
}

void MomentSpec::validate() const {
    if (ops.empty() || ops.size() > 4) {
        throw std::invalid_argument("MomentSpec: between 1 and 4 operators are supported");
    }
    for (const auto &a : ops) {
        if (a.rows() != a.cols() || static_cast<std::size_t>(a.rows()) != dim()) {
            throw DimensionMismatch("MomentSpec: operators must be square with equal dimension");
        }
        if (!is_hermitian(a)) {
            throw std::invalid_argument("MomentSpec: operators must be Hermitian");
        }
    }
}

double haar_moment_exact(const MomentSpec &spec) {
    spec.validate();
    std::size_t n = spec.ops.size();
    double d = double(spec.dim());
    std::vector<std::size_t> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    Complex total = 0.0;
    do {
        Complex term = 1.0;
        std::vector<bool> seen(n, false);
        for (std::size_t start = 0; start < n; start++) {
            if (seen[start]) {
                continue;
            }
            ComplexMatrix prod = ComplexMatrix::Identity(spec.ops[0].rows(), spec.ops[0].cols());
            std::size_t r = start;
            do {
                seen[r] = true;
                prod = prod * spec.ops[r];
                r = pi[r];
            } while (r != start);
            term *= prod.trace();
        }
        total += term;
    } while (std::next_permutation(pi.begin(), pi.end()));
    double denom = 1.0;
    for (std::size_t j = 0; j < n; j++) {
        denom *= d + double(j);
    }
    return total.real() / denom;
}

double perp_moment_exact(const PureState &psi, const std::vector<ComplexMatrix> &ops) {
    auto n = static_cast<Eigen::Index>(psi.dim());
    if (n < 2) {
        throw InvalidDimension("perp_moment_exact: the complement is empty for d = 1");
    }
    if (ops.empty() || ops.size() > 2) {
        throw std::invalid_argument("perp_moment_exact: one or two operators are supported");
    }
    for (const auto &a : ops) {
        if (a.rows() != n || a.cols() != n) {
            throw DimensionMismatch("perp_moment_exact: operator dimension mismatch");
        }
    }
    ComplexMatrix q = ComplexMatrix::Identity(n, n) - psi.amplitudes() * psi.amplitudes().adjoint();
    double d = double(n);
    if (ops.size() == 1) {
        return (ops[0] * q).trace().real() / (d - 1);
    }
    ComplexMatrix aq = ops[0] * q, bq = ops[1] * q;
    Complex v = aq.trace() * bq.trace() + (aq * bq).trace();
    return v.real() / (d * (d - 1));
}

}  // namespace dqipe::oracles
