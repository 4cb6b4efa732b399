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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dqipe {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kPsdSlack = 1e-9;

/// Largest d^k (or d^{2k}) the dense tensor-space routines will materialize.
inline constexpr std::uint64_t kDenseBudget = 20000;

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidDimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DenseBudgetExceeded : std::length_error {
    using std::length_error::length_error;
};

bool is_hermitian(const ComplexMatrix &m, double tol = kHermitianTolerance);
bool is_unitary(const ComplexMatrix &m, double tol = kHermitianTolerance);
bool is_psd(const ComplexMatrix &m, double slack = kPsdSlack);

/// max_{ij} |a_ij - b_ij|.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Eigenvalues of a Hermitian matrix in ascending order.
RealVector hermitian_eigenvalues(const ComplexMatrix &m);

/// A unit vector in C^d. Stored as a raw vector with no global phase fixing.
class PureState {
   public:
    /// Throws std::invalid_argument unless | ||a||^2 - 1 | <= kNormTolerance.
    explicit PureState(ComplexVector amplitudes);

    /// Rescales to unit norm; throws on the zero vector.
    static PureState normalized(ComplexVector v);
    static PureState basis(std::size_t d, std::size_t index);

    std::size_t dim() const {
        return static_cast<std::size_t>(amps_.size());
    }
    const ComplexVector &amplitudes() const {
        return amps_;
    }
    Complex operator[](std::size_t i) const {
        return amps_(static_cast<Eigen::Index>(i));
    }
    /// |a><a|
    ComplexMatrix projector() const;
    /// a^{\otimes k} as a flat vector of length d^k (first factor most significant).
    ComplexVector tensor_power(std::size_t k) const;

   private:
    ComplexVector amps_;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
   public:
    /// Validates Hermiticity (1e-10), trace (1e-10) and min eigenvalue (>= -1e-9).
    explicit DensityMatrix(ComplexMatrix m);

    static DensityMatrix from_pure(const PureState &s);
    static DensityMatrix maximally_mixed(std::size_t d);

    std::size_t dim() const {
        return static_cast<std::size_t>(m_.rows());
    }
    const ComplexMatrix &matrix() const {
        return m_;
    }
    /// Tr(rho^2).
    double purity() const;
    bool is_pure(double tol = kHermitianTolerance) const {
        return purity() > 1.0 - tol;
    }

   private:
    ComplexMatrix m_;
};

void require_same_dim(std::size_t a, std::size_t b, const char *what);

}  // namespace dqipe
