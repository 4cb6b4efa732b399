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

#include "dqipe/oracles/rho_u_numeric.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "dqipe/linalg/tensor.h"

namespace dqipe::oracles {

namespace {

double binom(double n, double r) {
    double out = 1.0;
    for (double i = 1; i <= r; i++) {
        out = out * (n - r + i) / i;
    }
    return out;
}

}  // namespace

DensityMatrix rho_u_numeric(const PureState &u, std::size_t k) {
    std::size_t d = u.dim();
    std::size_t half = dense_power(d, k, "rho_u_numeric");
    std::size_t full = dense_power(d, 2 * k, "rho_u_numeric");
    double perms = std::tgamma(double(2 * k) + 1.0);
    if (perms * double(full) > 1e8) {
        throw DenseBudgetExceeded("rho_u_numeric: (2k)! d^{2k} permutation sum is too large");
    }
    ComplexVector uk = u.tensor_power(k);
    std::size_t n = 2 * k;
    ComplexMatrix out = ComplexMatrix::Zero(static_cast<Eigen::Index>(half), static_cast<Eigen::Index>(half));
    std::vector<std::size_t> pi(n), col(n), row(n);
    std::iota(pi.begin(), pi.end(), 0);
    do {
        for (std::size_t c = 0; c < full; c++) {
            index_to_digits(c, d, col);
            for (std::size_t r = 0; r < n; r++) {
                row[pi[r]] = col[r];
            }
            std::size_t ri = digits_to_index(row, d);
            // Row (j, i) and column (j'', i'): the last k factors are contracted with <u| and |u>.
            auto j = static_cast<Eigen::Index>(ri / half);
            auto i = static_cast<Eigen::Index>(ri % half);
            auto jpp = static_cast<Eigen::Index>(c / half);
            auto ip = static_cast<Eigen::Index>(c % half);
            out(j, jpp) += std::conj(uk(i)) * uk(ip);
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    double dd = double(d), kk = double(k);
    out *= binom(dd + kk - 1, kk) / binom(dd + 2 * kk - 1, 2 * kk) / perms;
    return DensityMatrix(0.5 * (out + out.adjoint()));
}

}  // namespace dqipe::oracles
