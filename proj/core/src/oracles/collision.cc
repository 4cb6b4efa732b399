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

#include "dqipe/oracles/collision.h"

#include <stdexcept>
#include <vector>

#include "dqipe/linalg/tensor.h"

namespace dqipe::oracles {

namespace {

// Mean vector E[c_b] and second moments E[c_b c_b'] of the symbol counts of m
// draws from p, by walking every outcome tuple.
void count_moments(const RealVector &p, std::size_t m, Eigen::VectorXd &first, Eigen::MatrixXd &second) {
    auto d = static_cast<std::size_t>(p.size());
    std::size_t tuples = dense_power(d, m, "exhaustive_collision_variance", 1000000);
    first = Eigen::VectorXd::Zero(p.size());
    second = Eigen::MatrixXd::Zero(p.size(), p.size());
    std::vector<std::size_t> digits(m);
    Eigen::VectorXd counts(p.size());
    for (std::size_t t = 0; t < tuples; t++) {
        index_to_digits(t, d, digits);
        double prob = 1.0;
        counts.setZero();
        for (std::size_t x : digits) {
            prob *= p(static_cast<Eigen::Index>(x));
            counts(static_cast<Eigen::Index>(x)) += 1.0;
        }
        first += prob * counts;
        second += prob * counts * counts.transpose();
    }
}

void check(const RealVector &p, const RealVector &q, std::size_t m) {
    if (p.size() != q.size() || p.size() == 0) {
        throw DimensionMismatch("exhaustive_collision_variance: p and q differ in length");
    }
    if (m == 0) {
        throw std::invalid_argument("exhaustive_collision_variance: m must be positive");
    }
}

}  // namespace

double exhaustive_collision_mean(const RealVector &p, const RealVector &q, std::size_t m) {
    check(p, q, m);
    Eigen::VectorXd fp, fq;
    Eigen::MatrixXd sp, sq;
    count_moments(p, m, fp, sp);
    count_moments(q, m, fq, sq);
    double mm = double(m);
    return fp.dot(fq) / (mm * mm);
}

double exhaustive_collision_variance(const RealVector &p, const RealVector &q, std::size_t m) {
    check(p, q, m);
    Eigen::VectorXd fp, fq;
    Eigen::MatrixXd sp, sq;
    count_moments(p, m, fp, sp);
    count_moments(q, m, fq, sq);
    double m2 = double(m) * double(m);
    double mean = fp.dot(fq) / m2;
    // X and Y are independent, so E[(sum_b cx_b cy_b)^2] = sum_{b,b'} E[cx_b cx_b'] E[cy_b cy_b'].
    double second = sp.cwiseProduct(sq).sum() / (m2 * m2);
    return second - mean * mean;
}

}  // namespace dqipe::oracles
