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

#include "dqipe/linalg/types.h"

#include <cmath>
#include <string>

#include "dqipe/linalg/tensor.h"

namespace dqipe {

bool is_hermitian(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return max_abs_diff(m, m.adjoint()) <= tol;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
    return max_abs_diff(m.adjoint() * m, id) <= tol;
}

bool is_psd(const ComplexMatrix &m, double slack) {
    if (!is_hermitian(m)) {
        return false;
    }
    if (m.rows() == 0) {
        return true;
    }
    return hermitian_eigenvalues(m)(0) >= -slack;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

RealVector hermitian_eigenvalues(const ComplexMatrix &m) {
    // Symmetrize so round-off in the input cannot leak an imaginary diagonal.
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
    }
    return solver.eigenvalues();
}

void require_same_dim(std::size_t a, std::size_t b, const char *what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": dimension mismatch (" + std::to_string(a) + " vs " +
                                std::to_string(b) + ")");
    }
}

PureState::PureState(ComplexVector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() == 0) {
        throw InvalidDimension("PureState: dimension must be positive");
    }
    double n2 = amps_.squaredNorm();
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("PureState: squared norm " + std::to_string(n2) + " is not 1");
    }
}

PureState PureState::normalized(ComplexVector v) {
    double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("PureState::normalized: cannot normalize a zero or non-finite vector");
    }
    v /= n;
    return PureState(std::move(v));
}

PureState PureState::basis(std::size_t d, std::size_t index) {
    if (d == 0) {
        throw InvalidDimension("PureState::basis: d must be positive");
    }
    if (index >= d) {
        throw std::out_of_range("PureState::basis: index out of range");
    }
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return PureState(std::move(v));
}

ComplexMatrix PureState::projector() const {
    return amps_ * amps_.adjoint();
}

ComplexVector PureState::tensor_power(std::size_t k) const {
    ComplexVector out = ComplexVector::Ones(1);
    for (std::size_t i = 0; i < k; i++) {
        out = kron(out, amps_);
    }
    return out;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
        throw InvalidDimension("DensityMatrix: must be a non-empty square matrix");
    }
    if (!is_hermitian(m_)) {
        throw std::invalid_argument("DensityMatrix: not Hermitian");
    }
    double tr = m_.trace().real();
    if (std::abs(tr - 1.0) > kHermitianTolerance) {
        throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr) + " is not 1");
    }
    if (hermitian_eigenvalues(m_)(0) < -kPsdSlack) {
        throw std::invalid_argument("DensityMatrix: not positive semidefinite");
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState &s) {
    return DensityMatrix(s.projector());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
    if (d == 0) {
        throw InvalidDimension("DensityMatrix::maximally_mixed: d must be positive");
    }
    auto n = static_cast<Eigen::Index>(d);
    return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(d));
}

double DensityMatrix::purity() const {
    return (m_.cwiseProduct(m_.transpose())).sum().real();
}

}  // namespace dqipe
