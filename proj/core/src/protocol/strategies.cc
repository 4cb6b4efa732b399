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

#include "dqipe/protocol/strategies.h"

#include <stdexcept>

#include "dqipe/estimators/multicopy.h"
#include "dqipe/estimators/singlecopy.h"
#include "dqipe/linalg/measures.h"
#include "dqipe/symmetric/povm.h"

namespace dqipe::protocol {

namespace {

const ComplexVector &state_of(const Message &m) {
    if (auto p = std::get_if<StateVectorPayload>(&m.payload)) {
        return p->amplitudes;
    }
    throw ProtocolViolation(std::string("expected a state_vector from ") + role_letter(m.from) + ", got " +
                            payload_type(m.payload));
}

const Message &from(const PartyContext &ctx, PartyRole who) {
    for (const auto &m : ctx.inbox()) {
        if (m.from == who) {
            return m;
        }
    }
    throw ProtocolViolation(std::string(role_letter(ctx.role())) + " has no message from " + role_letter(who));
}

/// Party that measures k copies with the standard POVM and sends the outcome.
Strategy send_povm_outcome(PureState state, std::size_t k, PartyRole to) {
    return [state = std::move(state), k, to](PartyContext &ctx) {
        PovmSample s = standard_povm_sample(state, k, ctx.rng());
        ctx.send(to, StateVectorPayload{s.u.amplitudes()});
    };
}

void check_pair(const PureState &phi, const PureState &psi, std::size_t k, const char *who) {
    require_same_dim(phi.dim(), psi.dim(), who);
    if (k == 0) {
        throw std::invalid_argument(std::string(who) + ": k must be positive");
    }
}

}  // namespace

Protocol multicopy_smp(const PureState &phi, const PureState &psi, std::size_t k) {
    check_pair(phi, psi, k, "multicopy_smp");
    std::size_t d = phi.dim();
    Protocol p{"multicopy", CommunicationSetting::smp(), d, k, false, {}, {}, {}};
    p.alice = send_povm_outcome(phi, k, PartyRole::referee);
    p.bob = send_povm_outcome(psi, k, PartyRole::referee);
    p.referee = [d, k](PartyContext &ctx) {
        PureState u(state_of(from(ctx, PartyRole::alice)));
        PureState v(state_of(from(ctx, PartyRole::bob)));
        ctx.finish(ResultPayload{multicopy_from_overlap(d, k, overlap2(u, v)), std::nullopt});
    };
    return p;
}

Protocol singlecopy_smp(const DensityMatrix &rho, const DensityMatrix &sigma, std::size_t n_bases, std::size_t m) {
    require_same_dim(rho.dim(), sigma.dim(), "singlecopy_smp");
    if (n_bases == 0 || m == 0) {
        throw std::invalid_argument("singlecopy_smp: N and m must be positive");
    }
    std::size_t d = rho.dim();
    Protocol p{"singlecopy", CommunicationSetting::smp(), d, n_bases * m, true, {}, {}, {}};
    auto measure = [d, n_bases, m](DensityMatrix state) {
        return [state = std::move(state), d, n_bases, m](PartyContext &ctx) {
            OutcomesPayload out;
            for (std::size_t i = 0; i < n_bases; i++) {
                out.blocks.push_back(born_sample(state, shared_basis(d, ctx.shared(), i), m, ctx.rng()));
            }
            ctx.send(PartyRole::referee, std::move(out));
        };
    };
    p.alice = measure(rho);
    p.bob = measure(sigma);
    p.referee = [d](PartyContext &ctx) {
        auto blocks = [&](PartyRole who) {
            const Message &msg = from(ctx, who);
            if (auto o = std::get_if<OutcomesPayload>(&msg.payload)) {
                return o->blocks;
            }
            throw ProtocolViolation(std::string("expected outcomes from ") + role_letter(who));
        };
        EstimateRecord r = singlecopy_from_outcomes(d, blocks(PartyRole::alice), blocks(PartyRole::bob));
        ctx.finish(ResultPayload{r.w, std::nullopt});
    };
    return p;
}

Protocol dipe_threshold_smp(const PureState &phi, const PureState &psi, std::size_t k) {
    check_pair(phi, psi, k, "dipe_threshold_smp");
    std::size_t d = phi.dim();
    Protocol p{"dipe-threshold", CommunicationSetting::smp(), d, k, false, {}, {}, {}};
    p.alice = send_povm_outcome(phi, k, PartyRole::referee);
    p.bob = send_povm_outcome(psi, k, PartyRole::referee);
    p.referee = [d](PartyContext &ctx) {
        PureState u(state_of(from(ctx, PartyRole::alice)));
        PureState v(state_of(from(ctx, PartyRole::bob)));
        ctx.finish(ResultPayload{std::nullopt, static_cast<int>(dipe_decide_threshold(u, v, d))});
    };
    return p;
}

Protocol dipe_pi0_one_way(const PureState &phi, const PureState &psi, std::size_t k) {
    check_pair(phi, psi, k, "dipe_pi0_one_way");
    Protocol p{"dipe-pi0", CommunicationSetting::one_way(), phi.dim(), k, false, {}, {}, {}};
    p.alice = send_povm_outcome(phi, k, PartyRole::bob);
    p.bob = [psi, k](PartyContext &ctx) {
        PureState u(state_of(from(ctx, PartyRole::alice)));
        DipeCase c = dipe_decide_pi0(u, psi, k, ctx.rng());
        ctx.send(PartyRole::referee, ResultPayload{std::nullopt, static_cast<int>(c)});
    };
    p.referee = forward_result;
    return p;
}

Protocol overlap_interactive(const PureState &phi, const PureState &psi, std::size_t k, std::size_t max_rounds) {
    check_pair(phi, psi, k, "overlap_interactive");
    if (max_rounds < 2) {
        throw std::invalid_argument("overlap_interactive: needs max_rounds >= 2");
    }
    std::size_t d = phi.dim();
    Protocol p{"overlap-interactive", CommunicationSetting::interactive(max_rounds), d, k, false, {}, {}, {}};
    p.alice = [phi, d, k](PartyContext &ctx) {
        if (ctx.inbox().empty()) {
            PovmSample s = standard_povm_sample(phi, k, ctx.rng());
            ctx.send(PartyRole::bob, StateVectorPayload{s.u.amplitudes()});
            return;
        }
        const auto *reply = std::get_if<ScalarPayload>(&ctx.inbox().back().payload);
        if (!reply) {
            throw ProtocolViolation("A expected a scalar overlap from B");
        }
        ctx.send(PartyRole::referee, ResultPayload{multicopy_from_overlap(d, k, reply->value), std::nullopt});
    };
    p.bob = [psi, k](PartyContext &ctx) {
        PureState u(state_of(from(ctx, PartyRole::alice)));
        PovmSample v = standard_povm_sample(psi, k, ctx.rng());
        ctx.send(PartyRole::alice, ScalarPayload{overlap2(u, v.u)});
    };
    p.referee = forward_result;
    return p;
}

}  // namespace dqipe::protocol
