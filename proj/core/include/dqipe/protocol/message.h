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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "dqipe/estimators/singlecopy.h"
#include "dqipe/linalg/types.h"

namespace dqipe::protocol {

enum class PartyRole { alice, bob, referee };

/// "alice", "bob", "referee".
const char *role_name(PartyRole r);
/// "A", "B", "R"; used in violation messages such as "A→B not allowed in SMP".
const char *role_letter(PartyRole r);
PartyRole parse_role(const std::string &s);

struct CommunicationSetting {
    enum class Kind { smp, one_way, interactive };
    Kind kind = Kind::smp;
    /// Upper bound on Alice<->Bob messages; only meaningful for interactive.
    std::size_t max_rounds = 0;

    static CommunicationSetting smp() {
        return {Kind::smp, 0};
    }
    static CommunicationSetting one_way() {
        return {Kind::one_way, 0};
    }
    static CommunicationSetting interactive(std::size_t max_rounds);

    /// "SMP", "OneWay", "Interactive".
    std::string name() const;
    /// "smp", "oneway", "interactive[:N]" as used on the command line.
    std::string token() const;
    static CommunicationSetting parse(const std::string &token);

    bool operator==(const CommunicationSetting &) const = default;
};

struct StateVectorPayload {
    ComplexVector amplitudes;
    bool operator==(const StateVectorPayload &o) const {
        return amplitudes.size() == o.amplitudes.size() && amplitudes == o.amplitudes;
    }
};

/// One outcome list per measurement basis.
struct OutcomesPayload {
    std::vector<Outcomes> blocks;
    bool operator==(const OutcomesPayload &) const = default;
};

struct ScalarPayload {
    double value = 0.0;
    bool operator==(const ScalarPayload &) const = default;
};

/// A protocol's final answer: a numeric estimate, a case label, or both.
struct ResultPayload {
    std::optional<double> estimate;
    std::optional<int> label;
    bool operator==(const ResultPayload &) const = default;
};

using Payload = std::variant<StateVectorPayload, OutcomesPayload, ScalarPayload, ResultPayload>;

/// "state_vector", "outcomes", "scalar", "result".
const char *payload_type(const Payload &p);

struct Message {
    std::size_t round = 0;
    PartyRole from = PartyRole::alice;
    PartyRole to = PartyRole::referee;
    Payload payload;

    /// Length of the little-endian binary encoding of the payload.
    std::size_t byte_size() const;
    bool operator==(const Message &) const = default;
};

struct Transcript {
    CommunicationSetting setting;
    std::string run_id;
    std::size_t d = 0;
    std::size_t k = 0;
    std::vector<Message> messages;
    std::optional<ResultPayload> result;
    /// Key of the pre-shared random stream; set iff the protocol declared one.
    std::optional<std::uint64_t> shared_seed;

    bool operator==(const Transcript &) const = default;
};

/// A strategy tried to use an edge the setting forbids.
struct ProtocolViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// nullopt when the message pattern conforms to the setting, otherwise a
/// description of the first problem found.
std::optional<std::string> validate_transcript(const Transcript &t);

struct TranscriptCost {
    std::size_t messages = 0;
    std::size_t bytes = 0;
    bool operator==(const TranscriptCost &) const = default;
};

TranscriptCost transcript_cost(const Transcript &t);

}  // namespace dqipe::protocol
