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

#include "dqipe/linalg/measures.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace dqipe {

double overlap2(const PureState &a, const PureState &b) {
    require_same_dim(a.dim(), b.dim(), "overlap2");
    return std::norm(a.amplitudes().dot(b.amplitudes()));
}

double trace_inner(const DensityMatrix &rho, const DensityMatrix &sigma) {
    require_same_dim(rho.dim(), sigma.dim(), "trace_inner");
    return rho.matrix().cwiseProduct(sigma.matrix().transpose()).sum().real();
}

double trace_distance(const ComplexMatrix &rho, const ComplexMatrix &sigma) {
    require_same_dim(static_cast<std::size_t>(rho.rows()), static_cast<std::size_t>(sigma.rows()),
                     "trace_distance");
    return 0.5 * hermitian_eigenvalues(rho - sigma).cwiseAbs().sum();
}

double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma) {
    return trace_distance(rho.matrix(), sigma.matrix());
}

double dmax(const ComplexMatrix &rho, const ComplexMatrix &sigma) {
    require_same_dim(static_cast<std::size_t>(rho.rows()), static_cast<std::size_t>(sigma.rows()), "dmax");
    if (!is_psd(rho) || !is_psd(sigma)) {
        throw std::invalid_argument("dmax: inputs must be positive semidefinite");
    }
    ComplexMatrix s = 0.5 * (sigma + sigma.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(s);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("dmax: eigensolver failed");
    }
    const RealVector &vals = eig.eigenvalues();
    const ComplexMatrix &vecs = eig.eigenvectors();
    Eigen::Index n = vals.size();
    Eigen::Index first_support = 0;
    while (first_support < n && vals(first_support) <= kPsdSlack) {
        first_support++;
    }
    Eigen::Index support = n - first_support;
    if (first_support > 0) {
        ComplexMatrix kernel = vecs.leftCols(first_support);
        ComplexMatrix outside = kernel.adjoint() * rho * kernel;
        if (outside.cwiseAbs().maxCoeff() > kPsdSlack) {
            return std::numeric_limits<double>::infinity();
        }
    }
    if (support == 0) {
        return std::numeric_limits<double>::infinity();
    }
    ComplexMatrix basis = vecs.rightCols(support);
    RealVector inv_sqrt = vals.tail(support).cwiseSqrt().cwiseInverse();
    ComplexMatrix m = inv_sqrt.asDiagonal() * (basis.adjoint() * rho * basis) * inv_sqrt.asDiagonal();
    double top = hermitian_eigenvalues(m)(support - 1);
    if (top <= 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    return std::log(top);
}

double dmax(const DensityMatrix &rho, const DensityMatrix &sigma) {
    return dmax(rho.matrix(), sigma.matrix());
}

}  // namespace dqipe
