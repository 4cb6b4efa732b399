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

#include "dqipe/protocol/message.h"

#include <sstream>

#include "dqipe/protocol/wire.h"

namespace dqipe::protocol {

const char *role_name(PartyRole r) {
    switch (r) {
        case PartyRole::alice:
            return "alice";
        case PartyRole::bob:
            return "bob";
        case PartyRole::referee:
            return "referee";
    }
    return "?";
}

const char *role_letter(PartyRole r) {
    switch (r) {
        case PartyRole::alice:
            return "A";
        case PartyRole::bob:
            return "B";
        case PartyRole::referee:
            return "R";
    }
    return "?";
}

PartyRole parse_role(const std::string &s) {
    if (s == "alice") {
        return PartyRole::alice;
    }
    if (s == "bob") {
        return PartyRole::bob;
    }
    if (s == "referee") {
        return PartyRole::referee;
    }
    throw std::invalid_argument("unknown party role '" + s + "'");
}

CommunicationSetting CommunicationSetting::interactive(std::size_t max_rounds) {
    if (max_rounds == 0) {
        throw std::invalid_argument("interactive setting needs max_rounds >= 1");
    }
    return {Kind::interactive, max_rounds};
}

std::string CommunicationSetting::name() const {
    switch (kind) {
        case Kind::smp:
            return "SMP";
        case Kind::one_way:
            return "OneWay";
        case Kind::interactive:
            return "Interactive";
    }
    return "?";
}

std::string CommunicationSetting::token() const {
    switch (kind) {
        case Kind::smp:
            return "smp";
        case Kind::one_way:
            return "oneway";
        case Kind::interactive:
            return "interactive:" + std::to_string(max_rounds);
    }
    return "?";
}

CommunicationSetting CommunicationSetting::parse(const std::string &token) {
    if (token == "smp") {
        return smp();
    }
    if (token == "oneway" || token == "one-way") {
        return one_way();
    }
    if (token == "interactive") {
        return interactive(8);
    }
    const std::string prefix = "interactive:";
    if (token.rfind(prefix, 0) == 0) {
        return interactive(std::stoul(token.substr(prefix.size())));
    }
    throw std::invalid_argument("unknown communication setting '" + token + "'");
}

const char *payload_type(const Payload &p) {
    static const char *names[] = {"state_vector", "outcomes", "scalar", "result"};
    return names[p.index()];
}

std::size_t Message::byte_size() const {
    return encode_binary(payload).size();
}

namespace {

std::string edge(const Message &m) {
    return std::string(role_letter(m.from)) + "→" + role_letter(m.to);
}

bool is_result(const Message &m) {
    return std::holds_alternative<ResultPayload>(m.payload);
}

std::optional<std::string> validate_smp(const Transcript &t) {
    for (const auto &m : t.messages) {
        if (m.to != PartyRole::referee || m.from == PartyRole::referee) {
            return edge(m) + " not allowed in SMP";
        }
        if (m.round != 0) {
            return "SMP messages must all be in round 0";
        }
    }
    for (PartyRole r : {PartyRole::alice, PartyRole::bob}) {
        std::size_t n = 0;
        for (const auto &m : t.messages) {
            n += m.from == r;
        }
        if (n != 1) {
            return std::string("SMP needs exactly one ") + role_letter(r) + "→R message, found " + std::to_string(n);
        }
    }
    return std::nullopt;
}

std::optional<std::string> validate_one_way(const Transcript &t) {
    for (const auto &m : t.messages) {
        bool ok = (m.from == PartyRole::alice && m.to == PartyRole::bob) ||
                  (m.from == PartyRole::bob && m.to == PartyRole::referee);
        if (!ok) {
            return edge(m) + " not allowed in OneWay";
        }
    }
    if (t.messages.size() != 2 || t.messages[0].from != PartyRole::alice || t.messages[1].from != PartyRole::bob) {
        return "OneWay needs exactly A→B then B→R, found " + std::to_string(t.messages.size()) + " messages";
    }
    if (t.messages[0].round != 0 || t.messages[1].round != 1) {
        return "OneWay messages must be in rounds 0 and 1";
    }
    if (!is_result(t.messages[1])) {
        return "OneWay B→R message must carry the result";
    }
    return std::nullopt;
}

std::optional<std::string> validate_interactive(const Transcript &t) {
    if (t.messages.empty()) {
        return std::string("Interactive run has no messages");
    }
    std::size_t peer = 0;
    PartyRole expect = PartyRole::alice;
    for (std::size_t i = 0; i < t.messages.size(); i++) {
        const auto &m = t.messages[i];
        if (m.from == PartyRole::referee) {
            return edge(m) + " not allowed in Interactive";
        }
        if (m.from != expect) {
            return "Interactive turns must alternate starting with A; message " + std::to_string(i) + " is " +
                   edge(m);
        }
        if (m.round != i) {
            return "Interactive message " + std::to_string(i) + " has round " + std::to_string(m.round);
        }
        bool last = i + 1 == t.messages.size();
        if (m.to == PartyRole::referee) {
            if (!last) {
                return "Interactive run continues after " + edge(m);
            }
            if (!is_result(m)) {
                return "Interactive " + edge(m) + " message must carry the result";
            }
        } else {
            if (last) {
                return std::string("Interactive run ends without a result message");
            }
            peer++;
        }
        expect = expect == PartyRole::alice ? PartyRole::bob : PartyRole::alice;
    }
    if (peer > t.setting.max_rounds) {
        return std::to_string(peer) + " alternations exceed max_rounds=" + std::to_string(t.setting.max_rounds) +
               " in Interactive";
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::string> validate_transcript(const Transcript &t) {
    for (const auto &m : t.messages) {
        if (m.from == m.to) {
            return edge(m) + " is a self-message";
        }
    }
    std::optional<std::string> err;
    switch (t.setting.kind) {
        case CommunicationSetting::Kind::smp:
            err = validate_smp(t);
            break;
        case CommunicationSetting::Kind::one_way:
            err = validate_one_way(t);
            break;
        case CommunicationSetting::Kind::interactive:
            err = validate_interactive(t);
            break;
    }
    if (err) {
        return err;
    }
    if (!t.result) {
        return std::string("transcript has no final result");
    }
    return std::nullopt;
}

TranscriptCost transcript_cost(const Transcript &t) {
    TranscriptCost c;
    for (const auto &m : t.messages) {
        c.messages++;
        c.bytes += m.byte_size();
    }
    return c;
}

}  // namespace dqipe::protocol
