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

#include "dqipe/symmetric/sym_basis.h"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dqipe/linalg/tensor.h"
#include "exact.h"

namespace dqipe {

std::uint64_t sym_dimension(std::uint64_t d, std::uint64_t k) {
    if (d == 0) {
        throw InvalidDimension("sym_dimension: d must be positive");
    }
    detail::BigInt c = detail::binomial(d + k - 1, k);
    if (c > std::numeric_limits<std::uint64_t>::max()) {
        throw std::overflow_error("sym_dimension: C(d+k-1, k) exceeds 64 bits");
    }
    return c.convert_to<std::uint64_t>();
}

namespace {

void fill_types(std::size_t pos, std::uint32_t left, TypeVector &cur, std::vector<TypeVector> &out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = left;
        out.push_back(cur);
        return;
    }
    for (std::uint32_t v = left + 1; v-- > 0;) {
        cur[pos] = v;
        fill_types(pos + 1, left - v, cur, out);
    }
}

}  // namespace

std::vector<TypeVector> type_vectors(std::size_t d, std::size_t k) {
    if (d == 0) {
        throw InvalidDimension("type_vectors: d must be positive");
    }
    std::vector<TypeVector> out;
    TypeVector cur(d, 0);
    fill_types(0, static_cast<std::uint32_t>(k), cur, out);
    return out;
}

SymBasis::SymBasis(std::size_t d, std::size_t k) : d_(d), k_(k), types_(type_vectors(d, k)) {
    std::size_t n = dense_power(d, k, "SymBasis");
    std::map<TypeVector, std::size_t> rank;
    for (std::size_t i = 0; i < types_.size(); i++) {
        rank.emplace(types_[i], i);
    }
    support_.resize(types_.size());
    std::vector<std::size_t> digits(k);
    TypeVector t(d);
    for (std::size_t idx = 0; idx < n; idx++) {
        index_to_digits(idx, d, digits);
        std::fill(t.begin(), t.end(), 0);
        for (std::size_t x : digits) {
            t[x]++;
        }
        support_[rank.at(t)].push_back(idx);
    }
}

ComplexVector SymBasis::vector(std::size_t i) const {
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(checked_pow(d_, k_)));
    double a = 1.0 / std::sqrt(static_cast<double>(support_[i].size()));
    for (std::size_t idx : support_[i]) {
        v(static_cast<Eigen::Index>(idx)) = a;
    }
    return v;
}

ComplexMatrix SymBasis::dense() const {
    auto rows = static_cast<Eigen::Index>(checked_pow(d_, k_));
    ComplexMatrix m = ComplexMatrix::Zero(rows, static_cast<Eigen::Index>(size()));
    for (std::size_t i = 0; i < size(); i++) {
        double a = 1.0 / std::sqrt(static_cast<double>(support_[i].size()));
        for (std::size_t idx : support_[i]) {
            m(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(i)) = a;
        }
    }
    return m;
}

namespace {

void require_permutation(const Permutation &perm) {
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t p : perm) {
        if (p >= perm.size() || seen[p]) {
            throw std::invalid_argument("not a permutation of 0..k-1");
        }
        seen[p] = true;
    }
}

std::size_t permuted_index(const Permutation &perm, std::size_t idx, std::size_t d, std::vector<std::size_t> &in,
                           std::vector<std::size_t> &out) {
    index_to_digits(idx, d, in);
    for (std::size_t r = 0; r < perm.size(); r++) {
        out[perm[r]] = in[r];
    }
    return digits_to_index(out, d);
}

}  // namespace

ComplexVector apply_permutation(const Permutation &perm, const ComplexVector &x, std::size_t d) {
    require_permutation(perm);
    std::size_t k = perm.size();
    if (static_cast<std::uint64_t>(x.size()) != checked_pow(d, k)) {
        throw DimensionMismatch("apply_permutation: vector length is not d^k");
    }
    ComplexVector y(x.size());
    std::vector<std::size_t> in(k), out(k);
    for (Eigen::Index i = 0; i < x.size(); i++) {
        y(static_cast<Eigen::Index>(permuted_index(perm, static_cast<std::size_t>(i), d, in, out))) = x(i);
    }
    return y;
}

ComplexMatrix permutation_operator(const Permutation &perm, std::size_t d) {
    require_permutation(perm);
    std::size_t k = perm.size();
    auto n = static_cast<Eigen::Index>(dense_power(d, k, "permutation_operator"));
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    std::vector<std::size_t> in(k), out(k);
    for (Eigen::Index c = 0; c < n; c++) {
        m(static_cast<Eigen::Index>(permuted_index(perm, static_cast<std::size_t>(c), d, in, out)), c) = 1.0;
    }
    return m;
}

Permutation compose(const Permutation &pi1, const Permutation &pi2) {
    if (pi1.size() != pi2.size()) {
        throw DimensionMismatch("compose: permutations of different sizes");
    }
    Permutation out(pi1.size());
    for (std::size_t r = 0; r < pi2.size(); r++) {
        out[r] = pi1[pi2[r]];
    }
    return out;
}

ComplexMatrix sym_projector(std::size_t d, std::size_t k) {
    SymBasis basis(d, k);
    auto n = static_cast<Eigen::Index>(checked_pow(d, k));
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    for (std::size_t i = 0; i < basis.size(); i++) {
        const auto &s = basis.support(i);
        double w = 1.0 / static_cast<double>(s.size());
        for (std::size_t a : s) {
            for (std::size_t b : s) {
                p(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = w;
            }
        }
    }
    return p;
}

DensityMatrix maximally_mixed_sym(std::size_t d, std::size_t k) {
    return DensityMatrix(sym_projector(d, k) / static_cast<double>(sym_dimension(d, k)));
}

}  // namespace dqipe
