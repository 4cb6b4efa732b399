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

#include "dqipe/protocol/runner.h"

#include <cinttypes>
#include <cstdio>
#include <exception>
#include <thread>

#include "dqipe/estimators/record.h"

namespace dqipe::protocol {

namespace {

std::string edge(PartyRole from, PartyRole to) {
    return std::string(role_letter(from)) + "→" + role_letter(to);
}

PartyRole peer_of(PartyRole r) {
    return r == PartyRole::alice ? PartyRole::bob : PartyRole::alice;
}

std::string hex_key(std::uint64_t key) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, key);
    return buf;
}

}  // namespace

PartyContext::PartyContext(PartyRole role, std::size_t round, const CommunicationSetting &setting, RngStream &rng,
                           const std::optional<RngStream> &shared, const std::vector<Message> *inbox,
                           const std::vector<Message> *history)
    : role_(role),
      round_(round),
      setting_(setting),
      rng_(rng),
      shared_(shared),
      inbox_(inbox),
      history_(history) {}

const RngStream &PartyContext::shared() const {
    if (role_ == PartyRole::referee) {
        throw ProtocolViolation("the referee has no access to shared randomness");
    }
    if (!shared_) {
        throw ProtocolViolation(std::string(role_letter(role_)) + " read shared randomness that was not declared");
    }
    return *shared_;
}

void PartyContext::send(PartyRole to, Payload payload) {
    const std::string e = edge(role_, to);
    const std::string where = " not allowed in " + setting_.name();
    if (role_ == PartyRole::referee || to == role_) {
        throw ProtocolViolation(e + where);
    }
    if (!outbox_.empty()) {
        throw ProtocolViolation("second message " + e + " in one turn" + where);
    }
    bool is_result = std::holds_alternative<ResultPayload>(payload);
    switch (setting_.kind) {
        case CommunicationSetting::Kind::smp:
            if (to != PartyRole::referee) {
                throw ProtocolViolation(e + where);
            }
            break;
        case CommunicationSetting::Kind::one_way:
            if (role_ == PartyRole::alice && to != PartyRole::bob) {
                throw ProtocolViolation(e + where);
            }
            if (role_ == PartyRole::bob && (to != PartyRole::referee || !is_result)) {
                throw ProtocolViolation(to == PartyRole::referee ? e + " must carry the result in OneWay"
                                                                 : e + where);
            }
            break;
        case CommunicationSetting::Kind::interactive:
            if (to == PartyRole::referee) {
                if (!is_result) {
                    throw ProtocolViolation(e + " must carry the result in Interactive");
                }
            } else {
                std::size_t exchanged = 0;
                for (const auto &m : *history_) {
                    exchanged += m.to != PartyRole::referee;
                }
                if (exchanged >= setting_.max_rounds) {
                    throw ProtocolViolation(e + " exceeds max_rounds=" + std::to_string(setting_.max_rounds) +
                                            " in Interactive");
                }
            }
            break;
    }
    outbox_.push_back(Message{round_, role_, to, std::move(payload)});
}

void PartyContext::finish(ResultPayload result) {
    if (role_ != PartyRole::referee) {
        throw ProtocolViolation(std::string(role_letter(role_)) + " cannot finish the run; only R can");
    }
    result_ = std::move(result);
}

void forward_result(PartyContext &ctx) {
    for (auto it = ctx.inbox().rbegin(); it != ctx.inbox().rend(); ++it) {
        if (auto r = std::get_if<ResultPayload>(&it->payload)) {
            ctx.finish(*r);
            return;
        }
    }
    throw ProtocolViolation("R received no result message");
}

class Runner {
   public:
    Runner(const Protocol &p, const RngStream &rng, const RunOptions &o)
        : p_(p),
          opts_(o),
          transport_(o.transport ? *o.transport : inproc_),
          rngs_{rng.child(streams::kAlice), rng.child(streams::kBob), rng.child(streams::kReferee)} {
        if (!p.alice || !p.bob || !p.referee) {
            throw std::invalid_argument("run_protocol: every party needs a strategy");
        }
        if (p.shared_randomness) {
            shared_ = rng.child(streams::kShared);
        }
        t_.setting = p.setting;
        t_.run_id = hex_key(rng.key());
        t_.d = p.d;
        t_.k = p.k;
        if (shared_) {
            t_.shared_seed = shared_->key();
        }
    }

    Transcript run() {
        Hello hello{t_.run_id, p_.d, p_.k, p_.setting, {}};
        for (PartyRole r : {PartyRole::alice, PartyRole::bob, PartyRole::referee}) {
            hello.seed_commitments.emplace_back(role_name(r), commitment_hex(rngs_[idx(r)].key()));
        }
        if (shared_) {
            hello.seed_commitments.emplace_back("shared", commitment_hex(shared_->key()));
        }
        transport_.open(hello);

        std::size_t round = 0;
        switch (p_.setting.kind) {
            case CommunicationSetting::Kind::smp:
                round = run_smp();
                break;
            case CommunicationSetting::Kind::one_way:
                round = run_one_way();
                break;
            case CommunicationSetting::Kind::interactive:
                round = run_interactive();
                break;
        }

        PartyContext ref = context(PartyRole::referee, round);
        p_.referee(ref);
        if (!ref.outbox_.empty()) {
            throw ProtocolViolation("R sent a message; the referee only finishes");
        }
        if (!ref.result_) {
            throw ProtocolViolation("R ended its turn without a result");
        }
        t_.result = transport_.close(t_.run_id, round, *ref.result_);
        if (auto err = validate_transcript(t_)) {
            throw ProtocolViolation("runner produced an invalid transcript: " + *err);
        }
        return std::move(t_);
    }

   private:
    static std::size_t idx(PartyRole r) {
        return static_cast<std::size_t>(r);
    }

    PartyContext context(PartyRole r, std::size_t round) {
        return PartyContext(r, round, p_.setting, rngs_[idx(r)], shared_, &inboxes_[idx(r)], &t_.messages);
    }

    const Strategy &strategy(PartyRole r) const {
        return r == PartyRole::alice ? p_.alice : p_.bob;
    }

    void deliver(const PartyContext &ctx) {
        for (const auto &m : ctx.outbox_) {
            Message got = transport_.carry(t_.run_id, m);
            inboxes_[idx(got.to)].push_back(got);
            t_.messages.push_back(std::move(got));
        }
    }

    static void require_one(const PartyContext &ctx, PartyRole to) {
        if (ctx.outbox_.size() != 1) {
            throw ProtocolViolation(edge(ctx.role(), to) + " message missing in " + ctx.setting().name());
        }
    }

    std::size_t run_smp() {
        PartyContext a = context(PartyRole::alice, 0);
        PartyContext b = context(PartyRole::bob, 0);
        if (opts_.concurrent) {
            std::exception_ptr err_b;
            std::thread tb([&] {
                try {
                    p_.bob(b);
                } catch (...) {
                    err_b = std::current_exception();
                }
            });
            try {
                p_.alice(a);
            } catch (...) {
                tb.join();
                throw;
            }
            tb.join();
            if (err_b) {
                std::rethrow_exception(err_b);
            }
        } else {
            p_.alice(a);
            p_.bob(b);
        }
        require_one(a, PartyRole::referee);
        require_one(b, PartyRole::referee);
        deliver(a);
        deliver(b);
        return 1;
    }

    std::size_t run_one_way() {
        PartyContext a = context(PartyRole::alice, 0);
        p_.alice(a);
        require_one(a, PartyRole::bob);
        deliver(a);
        PartyContext b = context(PartyRole::bob, 1);
        p_.bob(b);
        require_one(b, PartyRole::referee);
        deliver(b);
        return 2;
    }

    std::size_t run_interactive() {
        PartyRole turn = PartyRole::alice;
        for (std::size_t round = 0;; round++) {
            PartyContext c = context(turn, round);
            strategy(turn)(c);
            if (c.outbox_.size() != 1) {
                throw ProtocolViolation(std::string(role_letter(turn)) + " sent nothing on its turn in Interactive");
            }
            bool done = c.outbox_.front().to == PartyRole::referee;
            deliver(c);
            if (done) {
                return round + 1;
            }
            turn = peer_of(turn);
        }
    }

    const Protocol &p_;
    RunOptions opts_;
    InProcTransport inproc_;
    Transport &transport_;
    RngStream rngs_[3];
    std::optional<RngStream> shared_;
    std::vector<Message> inboxes_[3];
    Transcript t_;
};

Transcript run_protocol(const Protocol &protocol, const RngStream &rng, const RunOptions &options) {
    return Runner(protocol, rng, options).run();
}

}  // namespace dqipe::protocol
