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

#include "dqipe/linalg/tensor.h"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace dqipe {

std::uint64_t checked_pow(std::uint64_t d, std::uint64_t k) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < k; i++) {
        if (d != 0 && out > std::numeric_limits<std::uint64_t>::max() / d) {
            throw std::overflow_error("checked_pow: d^k overflows 64 bits");
        }
        out *= d;
    }
    return out;
}

std::size_t dense_power(std::size_t d, std::size_t k, const char *op, std::uint64_t budget) {
    std::uint64_t n;
    try {
        n = checked_pow(d, k);
    } catch (const std::overflow_error &) {
        n = std::numeric_limits<std::uint64_t>::max();
    }
    if (n > budget) {
        throw DenseBudgetExceeded(std::string(op) + ": dense dimension " + std::to_string(d) + "^" +
                                  std::to_string(k) + " exceeds the budget of " + std::to_string(budget));
    }
    return static_cast<std::size_t>(n);
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); i++) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

ComplexVector apply_on_each_factor(const ComplexMatrix &v, const ComplexVector &x, std::size_t d, std::size_t k) {
    auto n = static_cast<Eigen::Index>(d);
    if (v.rows() != n || v.cols() != n) {
        throw DimensionMismatch("apply_on_each_factor: operator is not d x d");
    }
    if (static_cast<std::uint64_t>(x.size()) != checked_pow(d, k)) {
        throw DimensionMismatch("apply_on_each_factor: vector length is not d^k");
    }
    ComplexVector cur = x;
    ComplexVector next(x.size());
    // Factor s has stride d^{k-1-s}; view the vector as (outer, d, inner) blocks.
    std::size_t inner = 1;
    for (std::size_t s = 0; s < k; s++) {
        std::size_t outer = static_cast<std::size_t>(x.size()) / (inner * d);
        for (std::size_t o = 0; o < outer; o++) {
            for (std::size_t in = 0; in < inner; in++) {
                std::size_t base = o * d * inner + in;
                for (std::size_t r = 0; r < d; r++) {
                    Complex acc = 0;
                    for (std::size_t c = 0; c < d; c++) {
                        acc += v(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *
                               cur(static_cast<Eigen::Index>(base + c * inner));
                    }
                    next(static_cast<Eigen::Index>(base + r * inner)) = acc;
                }
            }
        }
        std::swap(cur, next);
        inner *= d;
    }
    return cur;
}

ComplexMatrix partial_trace_last(const ComplexMatrix &m, std::size_t d, std::size_t factors, std::size_t traced) {
    if (traced > factors) {
        throw std::invalid_argument("partial_trace_last: cannot trace more factors than exist");
    }
    std::uint64_t total = checked_pow(d, factors);
    if (static_cast<std::uint64_t>(m.rows()) != total || m.rows() != m.cols()) {
        throw DimensionMismatch("partial_trace_last: matrix is not d^factors square");
    }
    auto keep = static_cast<Eigen::Index>(checked_pow(d, factors - traced));
    auto gone = static_cast<Eigen::Index>(checked_pow(d, traced));
    ComplexMatrix out = ComplexMatrix::Zero(keep, keep);
    for (Eigen::Index i = 0; i < keep; i++) {
        for (Eigen::Index j = 0; j < keep; j++) {
            Complex acc = 0;
            for (Eigen::Index e = 0; e < gone; e++) {
                acc += m(i * gone + e, j * gone + e);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

void index_to_digits(std::size_t index, std::size_t d, std::span<std::size_t> digits) {
    for (std::size_t s = digits.size(); s-- > 0;) {
        digits[s] = index % d;
        index /= d;
    }
}

std::size_t digits_to_index(std::span<const std::size_t> digits, std::size_t d) {
    std::size_t out = 0;
    for (std::size_t x : digits) {
        out = out * d + x;
    }
    return out;
}

}  // namespace dqipe
