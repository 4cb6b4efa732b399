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

#include "dqipe/symmetric/channels.h"

#include <iostream>
#include <stdexcept>

#include "dqipe/linalg/tensor.h"
#include "dqipe/symmetric/sym_basis.h"
#include "exact.h"

namespace dqipe {

namespace {

double binomial_ratio(std::uint64_t n1, std::uint64_t r1, std::uint64_t n2, std::uint64_t r2) {
    return detail::to_double(detail::BigRational(detail::binomial(n1, r1), detail::binomial(n2, r2)));
}

ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    return 0.5 * (m + m.adjoint());
}

}  // namespace

DensityMatrix mp_channel(const DensityMatrix &tau, std::size_t d, std::size_t k) {
    std::size_t half = dense_power(d, k, "mp_channel");
    dense_power(d, 2 * k, "mp_channel");
    if (tau.dim() != half) {
        throw DimensionMismatch("mp_channel: tau must act on (C^d)^{\\otimes k}");
    }
    ComplexMatrix t = tau.matrix();
    ComplexMatrix p = sym_projector(d, k);
    ComplexMatrix projected = p * t * p;
    if (max_abs_diff(projected, t) > kHermitianTolerance) {
        double w = projected.trace().real();
        if (!(w > kPsdSlack)) {
            throw std::invalid_argument("mp_channel: tau has no weight on the symmetric subspace");
        }
        std::cerr << "dqipe: mp_channel input is not supported on the symmetric subspace; projecting (kept weight "
                  << w << ")\n";
        t = projected / w;
    }

    // out[j, j''] = sum over pairs (i', j), (i, j'') in one type class of tau[i, i'] / |class|.
    SymBasis big(d, 2 * k);
    auto n = static_cast<std::size_t>(half);
    ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t c = 0; c < big.size(); c++) {
        const auto &s = big.support(c);
        double w = 1.0 / static_cast<double>(s.size());
        for (std::size_t x : s) {
            auto ip = static_cast<Eigen::Index>(x / n);
            auto j = static_cast<Eigen::Index>(x % n);
            for (std::size_t y : s) {
                auto i = static_cast<Eigen::Index>(y / n);
                auto jpp = static_cast<Eigen::Index>(y % n);
                out(j, jpp) += w * t(i, ip);
            }
        }
    }
    out *= binomial_ratio(d + k - 1, k, d + 2 * k - 1, 2 * k);
    return DensityMatrix(hermitian_part(out));
}

DensityMatrix clone_channel(const DensityMatrix &rho, std::size_t d, std::size_t s, std::size_t k) {
    if (s > k) {
        throw std::invalid_argument("clone_channel: requires s <= k");
    }
    dense_power(d, k, "clone_channel");
    if (rho.dim() != checked_pow(d, s)) {
        throw DimensionMismatch("clone_channel: rho must act on (C^d)^{\\otimes s}");
    }
    auto rest = static_cast<Eigen::Index>(checked_pow(d, k - s));
    ComplexMatrix p = sym_projector(d, k);
    ComplexMatrix in = kron(rho.matrix(), ComplexMatrix::Identity(rest, rest));
    ComplexMatrix out = p * in * p;
    out *= binomial_ratio(d + s - 1, s, d + k - 1, k);
    return DensityMatrix(hermitian_part(out));
}

double mp_clone_weight(std::size_t d, std::size_t k, std::size_t s) {
    if (s > k) {
        throw std::invalid_argument("mp_clone_weight: requires s <= k");
    }
    detail::BigInt num = detail::binomial(k, s) * detail::binomial(d + k - 1, k - s);
    return detail::to_double(detail::BigRational(num, detail::binomial(d + 2 * k - 1, k)));
}

}  // namespace dqipe
