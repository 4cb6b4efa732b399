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

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dqipe/linalg/rng.h"
#include "dqipe/protocol/message.h"
#include "dqipe/protocol/transport.h"

namespace dqipe::protocol {

/// What a party sees during its turn.
class PartyContext {
   public:
    PartyRole role() const {
        return role_;
    }
    std::size_t round() const {
        return round_;
    }
    const CommunicationSetting &setting() const {
        return setting_;
    }
    /// The party's own stream.
    RngStream &rng() {
        return rng_;
    }
    /// The pre-shared stream; throws ProtocolViolation if none was declared
    /// or the caller is the referee.
    const RngStream &shared() const;
    /// Messages delivered to this party so far, in delivery order.
    const std::vector<Message> &inbox() const {
        return *inbox_;
    }
    /// Queues a message. Throws ProtocolViolation naming the edge when the
    /// setting forbids it at this point.
    void send(PartyRole to, Payload payload);
    /// Referee only: records the run's final answer.
    void finish(ResultPayload result);

   private:
    friend class Runner;
    PartyContext(PartyRole role, std::size_t round, const CommunicationSetting &setting, RngStream &rng,
                 const std::optional<RngStream> &shared, const std::vector<Message> *inbox,
                 const std::vector<Message> *history);

    PartyRole role_;
    std::size_t round_;
    const CommunicationSetting &setting_;
    RngStream &rng_;
    const std::optional<RngStream> &shared_;
    const std::vector<Message> *inbox_;
    const std::vector<Message> *history_;
    std::vector<Message> outbox_;
    std::optional<ResultPayload> result_;
};

using Strategy = std::function<void(PartyContext &)>;

/// The three callbacks plus what the hello frame announces.
struct Protocol {
    std::string name;
    CommunicationSetting setting;
    std::size_t d = 0;
    std::size_t k = 0;
    bool shared_randomness = false;
    Strategy alice;
    Strategy bob;
    Strategy referee;
};

struct RunOptions {
    /// Run Alice and Bob on separate threads during SMP rounds.
    bool concurrent = false;
    Transport *transport = nullptr;
};

/// Plays the protocol on trial stream `rng`: Alice, Bob, and the referee draw
/// from rng.child(streams::kAlice / kBob / kReferee), and the shared stream is
/// rng.child(streams::kShared). Messages produced in the same round are
/// delivered in role order, so threading never changes the transcript.
Transcript run_protocol(const Protocol &protocol, const RngStream &rng, const RunOptions &options = {});

/// Default referee for one-way and interactive runs: adopts the result message
/// it received.
void forward_result(PartyContext &ctx);

}  // namespace dqipe::protocol
