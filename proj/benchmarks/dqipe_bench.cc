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

#include <benchmark/benchmark.h>

#include "dqipe/estimators/multicopy.h"
#include "dqipe/estimators/singlecopy.h"
#include "dqipe/estimators/swap.h"
#include "dqipe/linalg/random_states.h"
#include "dqipe/protocol/runner.h"
#include "dqipe/protocol/strategies.h"
#include "dqipe/protocol/transport.h"
#include "dqipe/symmetric/block_spectrum.h"
#include "dqipe/symmetric/channels.h"
#include "dqipe/symmetric/povm.h"

using namespace dqipe;

namespace {

void BM_HaarUnitary(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    RngStream rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_haar_unitary(d, rng));
    }
}
BENCHMARK(BM_HaarUnitary)->Arg(4)->Arg(16)->Arg(64);

void BM_StandardPovmSample(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto k = static_cast<std::size_t>(state.range(1));
    RngStream rng(2);
    PureState phi = sample_haar_state(d, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(standard_povm_sample(phi, k, rng));
    }
}
BENCHMARK(BM_StandardPovmSample)->Args({16, 8})->Args({64, 48})->Args({1024, 64});

void BM_MulticopyEstimate(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    RngStream inst(3);
    auto [phi, psi] = make_state_pair(d, 0.5, inst);
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(multicopy_estimate(phi, psi, 16, RngStream(3, {i++})));
    }
}
BENCHMARK(BM_MulticopyEstimate)->Arg(8)->Arg(64)->Arg(512);

void BM_SinglecopyEstimate(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    RngStream inst(4);
    auto [phi, psi] = make_state_pair(d, 0.5, inst);
    DensityMatrix rho = DensityMatrix::from_pure(phi), sigma = DensityMatrix::from_pure(psi);
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(singlecopy_estimate(rho, sigma, 1, 32, RngStream(4, {i++})));
    }
}
BENCHMARK(BM_SinglecopyEstimate)->Arg(8)->Arg(32)->Arg(128);

void BM_RunProtocol(benchmark::State &state) {
    const bool tcp_transport = state.range(0) != 0;
    RngStream inst(5);
    auto [phi, psi] = make_state_pair(8, 0.5, inst);
    protocol::Protocol p = protocol::multicopy_smp(phi, psi, 16);
    protocol::TcpTransport tcp;
    protocol::RunOptions opts;
    if (tcp_transport) {
        opts.transport = &tcp;
    }
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(protocol::run_protocol(p, RngStream(5, {i++}), opts));
    }
    state.SetLabel(tcp_transport ? "tcp" : "inproc");
}
BENCHMARK(BM_RunProtocol)->Arg(0)->Arg(1);

void BM_MpChannel(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto k = static_cast<std::size_t>(state.range(1));
    RngStream rng(6);
    PureState u = sample_haar_state(d, rng);
    DensityMatrix tau = rho_u_closed_form(u, k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mp_channel(tau, d, k));
    }
}
BENCHMARK(BM_MpChannel)->Args({3, 2})->Args({4, 2})->Args({6, 2});

void BM_RhoUClosedForm(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    const auto k = static_cast<std::size_t>(state.range(1));
    RngStream rng(7);
    PureState u = sample_haar_state(d, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rho_u_closed_form(u, k));
    }
}
BENCHMARK(BM_RhoUClosedForm)->Args({3, 2})->Args({4, 3})->Args({8, 3});

void BM_SwapTest(benchmark::State &state) {
    RngStream rng(8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(swap_test(0.5, 100, rng));
    }
}
BENCHMARK(BM_SwapTest);

}  // namespace

BENCHMARK_MAIN();
