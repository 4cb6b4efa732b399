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

#include "dqipe/symmetric/block_spectrum.h"

#include <cmath>
#include <stdexcept>

#include "dqipe/linalg/tensor.h"
#include "dqipe/symmetric/sym_basis.h"
#include "exact.h"

namespace dqipe {

namespace {

constexpr std::size_t kExactMaxK = 200;
constexpr std::size_t kExactMaxD = std::size_t{1} << 32;

bool use_exact(std::size_t d, std::size_t k) {
    return k <= kExactMaxK && d <= kExactMaxD;
}

void require_d2(std::size_t d, const char *what) {
    if (d < 2) {
        throw InvalidDimension(std::string(what) + ": requires d >= 2");
    }
}

double log_binomial(double n, double r) {
    return std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0);
}

// log beta_t for the log-gamma path.
double log_beta(double d, double k, double t) {
    return std::lgamma(t + k + 1.0) - std::lgamma(t + 1.0) - std::lgamma(d + 2.0 * k) + std::lgamma(d + k);
}

detail::BigRational beta_exact(std::uint64_t d, std::uint64_t k, std::uint64_t t) {
    return detail::BigRational(detail::rising(t + 1, k), detail::rising(d + k, k));
}

}  // namespace

double beta_coefficient(std::size_t d, std::size_t k, std::size_t t) {
    if (t > k) {
        throw std::out_of_range("beta_coefficient: t must lie in [0, k]");
    }
    if (d == 0) {
        throw InvalidDimension("beta_coefficient: d must be positive");
    }
    if (k <= 100000) {
        double acc = 0.0;
        for (std::size_t j = 1; j <= k; j++) {
            acc += std::log(static_cast<double>(t + j) / static_cast<double>(d + k - 1 + j));
        }
        return std::exp(acc);
    }
    return std::exp(log_beta(double(d), double(k), double(t)));
}

double block_dimension(std::size_t d, std::size_t k, std::size_t t) {
    require_d2(d, "block_dimension");
    if (t > k) {
        throw std::out_of_range("block_dimension: t must lie in [0, k]");
    }
    std::uint64_t n = d + k - t - 2;
    std::uint64_t r = k - t;
    if (use_exact(d, k)) {
        return detail::binomial(n, r).convert_to<double>();
    }
    return std::exp(log_binomial(double(n), double(r)));
}

double SymBlockSpectrum::total_weight() const {
    double s = 0.0;
    for (std::size_t t = 0; t < beta.size(); t++) {
        s += beta[t] * dim[t];
    }
    return s;
}

SymBlockSpectrum block_spectrum(std::size_t d, std::size_t k) {
    require_d2(d, "block_spectrum");
    SymBlockSpectrum s;
    s.d = d;
    s.k = k;
    for (std::size_t t = 0; t <= k; t++) {
        s.beta.push_back(beta_coefficient(d, k, t));
        s.dim.push_back(block_dimension(d, k, t));
    }
    return s;
}

ComplexMatrix householder_to(const PureState &u) {
    auto n = static_cast<Eigen::Index>(u.dim());
    ComplexMatrix id = ComplexMatrix::Identity(n, n);
    double a0 = std::abs(u[0]);
    Complex ph = a0 > 0.0 ? u[0] / a0 : Complex(1.0);
    // w = conj(ph) u has a real non-negative first entry.
    ComplexVector w = std::conj(ph) * u.amplitudes();
    ComplexVector v = -w;
    v(0) += 1.0;
    double vv = v.squaredNorm();
    if (vv < 1e-24) {
        return id;
    }
    return id - (2.0 / vv) * v * v.adjoint();
}

ComplexMatrix pi_u_t(const PureState &u, std::size_t k, std::size_t t) {
    if (t > k) {
        throw std::out_of_range("pi_u_t: t must lie in [0, k]");
    }
    std::size_t d = u.dim();
    auto n = static_cast<Eigen::Index>(dense_power(d, k, "pi_u_t"));
    SymBasis basis(d, k);
    ComplexMatrix h = householder_to(u);
    std::vector<ComplexVector> cols;
    for (std::size_t i = 0; i < basis.size(); i++) {
        if (basis.type(i)[0] == t) {
            cols.push_back(apply_on_each_factor(h, basis.vector(i), d, k));
        }
    }
    ComplexMatrix w(n, static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); c++) {
        w.col(static_cast<Eigen::Index>(c)) = cols[c];
    }
    return w * w.adjoint();
}

DensityMatrix rho_u_closed_form(const PureState &u, std::size_t k) {
    std::size_t d = u.dim();
    auto n = static_cast<Eigen::Index>(dense_power(d, k, "rho_u_closed_form"));
    ComplexMatrix rho = ComplexMatrix::Zero(n, n);
    for (std::size_t t = 0; t <= k; t++) {
        rho += beta_coefficient(d, k, t) * pi_u_t(u, k, t);
    }
    return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

double trace_distance_rho_u_block(std::size_t d, std::size_t k) {
    require_d2(d, "trace_distance_rho_u_block");
    if (k == 0) {
        return 0.0;
    }
    if (use_exact(d, k)) {
        detail::BigInt total = detail::binomial(d + k - 1, k);
        detail::BigRational uniform(1, total);
        detail::BigRational acc = 0;
        for (std::size_t t = 0; t <= k; t++) {
            detail::BigRational b = beta_exact(d, k, t);
            if (b >= uniform) {
                break;
            }
            acc += (uniform - b) * detail::binomial(d + k - t - 2, k - t);
        }
        return detail::to_double(acc);
    }
    double dd = double(d), kk = double(k);
    double log_total = log_binomial(dd + kk - 1.0, kk);
    double acc = 0.0;
    for (std::size_t t = 0; t <= k; t++) {
        double tt = double(t);
        double lb = log_beta(dd, kk, tt);
        if (lb >= -log_total) {
            break;
        }
        double ldim = log_binomial(dd + kk - tt - 2.0, kk - tt);
        // dim_t (1/D - beta_t) = exp(ldim - log D) (1 - exp(lb + log D)).
        acc += std::exp(ldim - log_total) * -std::expm1(lb + log_total);
    }
    return acc;
}

double pi0_gap_closed_form(std::size_t d, std::size_t k) {
    require_d2(d, "pi0_gap_closed_form");
    if (use_exact(d, k)) {
        detail::BigRational first(detail::BigInt(d - 1), detail::BigInt(d + k - 1));
        detail::BigRational second(detail::rising(d - 1, k), detail::rising(d + k, k));
        return detail::to_double(first - second);
    }
    double dd = double(d), kk = double(k);
    double log_second = std::lgamma(dd + kk - 1.0) - std::lgamma(dd - 1.0) - std::lgamma(dd + 2.0 * kk) +
                        std::lgamma(dd + kk);
    return (dd - 1.0) / (dd + kk - 1.0) - std::exp(log_second);
}

bool only_first_block_below_uniform(std::size_t d, std::size_t k) {
    require_d2(d, "only_first_block_below_uniform");
    if (k == 0) {
        return false;
    }
    if (use_exact(d, k)) {
        detail::BigRational uniform(1, detail::binomial(d + k - 1, k));
        return beta_exact(d, k, 0) < uniform && beta_exact(d, k, 1) >= uniform;
    }
    double neg_log_total = -log_binomial(double(d + k - 1), double(k));
    return log_beta(double(d), double(k), 0.0) < neg_log_total &&
           log_beta(double(d), double(k), 1.0) >= neg_log_total;
}

}  // namespace dqipe
