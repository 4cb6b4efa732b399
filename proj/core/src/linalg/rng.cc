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

#include "dqipe/linalg/rng.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dqipe {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

namespace {

std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

std::uint64_t path_key(std::uint64_t seed, const std::vector<std::uint64_t> &path) {
    std::uint64_t h = mix64(seed ^ 0x6a09e667f3bcc908ULL);
    for (std::uint64_t p : path) {
        // Fold the depth in as well so (a) and (a, 0) never collide trivially.
        h = mix64(h ^ mix64(p + 0x3c6ef372fe94f82bULL));
    }
    return mix64(h + path.size());
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::vector<std::uint64_t> path)
    : seed_(seed), path_(std::move(path)), key_(path_key(seed_, path_)) {
    std::uint64_t x = key_;
    for (auto &w : s_) {
        x += 0x9e3779b97f4a7c15ULL;
        w = mix64(x);
    }
}

RngStream RngStream::child(std::uint64_t index) const {
    std::vector<std::uint64_t> p = path_;
    p.push_back(index);
    return RngStream(seed_, std::move(p));
}

RngStream::result_type RngStream::operator()() {
    // xoshiro256**
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RngStream::uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double RngStream::phase() {
    return 2.0 * std::numbers::pi * uniform();
}

double RngStream::normal() {
    return normal_(*this);
}

Complex RngStream::complex_normal() {
    double re = normal();
    double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

double RngStream::gamma(double shape) {
    if (!(shape > 0.0)) {
        throw std::invalid_argument("RngStream::gamma: shape must be positive");
    }
    std::gamma_distribution<double> g(shape, 1.0);
    return g(*this);
}

bool RngStream::bernoulli(double p) {
    return uniform() < p;
}

}  // namespace dqipe
