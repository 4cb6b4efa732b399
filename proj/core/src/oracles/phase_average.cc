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

#include "dqipe/oracles/phase_average.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dqipe/linalg/tensor.h"

namespace dqipe::oracles {

PhaseAverage phase_average_identity(Complex q, Complex g, Complex h, Complex l, std::size_t grid) {
    if (grid < 64) {
        throw std::invalid_argument("phase_average_identity: grid must be at least 64");
    }
    double sum = 0.0;
    const double step = 2.0 * std::numbers::pi / double(grid);
    for (std::size_t a = 0; a < grid; a++) {
        Complex et = std::polar(1.0, step * double(a));
        for (std::size_t b = 0; b < grid; b++) {
            Complex ep = std::polar(1.0, step * double(b));
            double n2 = std::norm(ep * std::conj(et) * q + ep * g + std::conj(et) * h + l);
            sum += n2 * n2;
        }
    }
    double lhs = sum / double(grid * grid);
    double Q = std::norm(q), G = std::norm(g), H = std::norm(h), L = std::norm(l);
    Complex cross = q * l * std::conj(g) * std::conj(h) + g * h * std::conj(q) * std::conj(l);
    double rhs = Q * Q + G * G + H * H + L * L +
                 4.0 * (G * H + L * G + L * H + Q * G + Q * H + Q * L + cross.real());
    return {lhs, rhs};
}

ComplexMatrix phase_averaged_power(const PureState &phi, double eps, std::size_t k, std::size_t grid) {
    auto n = static_cast<Eigen::Index>(dense_power(phi.dim(), k, "phase_averaged_power"));
    ComplexMatrix acc = ComplexMatrix::Zero(n, n);
    for (std::size_t g = 0; g < grid; g++) {
        double theta = 2.0 * std::numbers::pi * double(g) / double(grid);
        ComplexVector x = std::sqrt(eps) * phi.amplitudes();
        x(0) += std::sqrt(1.0 - eps) * std::polar(1.0, theta);
        ComplexVector v = ComplexVector::Ones(1);
        for (std::size_t r = 0; r < k; r++) {
            v = kron(v, x);
        }
        acc += v * v.adjoint();
    }
    return acc / double(grid);
}

}  // namespace dqipe::oracles
