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

#include "dqipe/protocol/wire.h"

#include <bit>
#include <cstring>
#include <stdexcept>

#include "dqipe/linalg/rng.h"

namespace dqipe::protocol {

namespace {

static_assert(std::endian::native == std::endian::little, "binary payload layout assumes a little-endian host");

void put_u8(std::vector<std::uint8_t> &out, std::uint8_t v) {
    out.push_back(v);
}

template <typename T>
void put(std::vector<std::uint8_t> &out, T v) {
    std::uint8_t buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    out.insert(out.end(), buf, buf + sizeof(T));
}

struct Reader {
    const std::vector<std::uint8_t> &bytes;
    std::size_t pos = 0;

    template <typename T>
    T get() {
        if (pos + sizeof(T) > bytes.size()) {
            throw std::invalid_argument("decode_binary: truncated payload");
        }
        T v;
        std::memcpy(&v, bytes.data() + pos, sizeof(T));
        pos += sizeof(T);
        return v;
    }
};

struct BinaryEncoder {
    std::vector<std::uint8_t> &out;
    void operator()(const StateVectorPayload &p) {
        put_u8(out, 0);
        put<std::uint64_t>(out, static_cast<std::uint64_t>(p.amplitudes.size()));
        for (Eigen::Index i = 0; i < p.amplitudes.size(); i++) {
            put<double>(out, p.amplitudes(i).real());
            put<double>(out, p.amplitudes(i).imag());
        }
    }
    void operator()(const OutcomesPayload &p) {
        put_u8(out, 1);
        put<std::uint64_t>(out, p.blocks.size());
        for (const auto &b : p.blocks) {
            put<std::uint64_t>(out, b.size());
            for (auto x : b) {
                put<std::uint32_t>(out, x);
            }
        }
    }
    void operator()(const ScalarPayload &p) {
        put_u8(out, 2);
        put<double>(out, p.value);
    }
    void operator()(const ResultPayload &p) {
        put_u8(out, 3);
        put_u8(out, static_cast<std::uint8_t>((p.estimate ? 1 : 0) | (p.label ? 2 : 0)));
        put<double>(out, p.estimate.value_or(0.0));
        put<std::int64_t>(out, p.label.value_or(0));
    }
};

struct JsonEncoder {
    nlohmann::json operator()(const StateVectorPayload &p) const {
        nlohmann::json a = nlohmann::json::array();
        for (Eigen::Index i = 0; i < p.amplitudes.size(); i++) {
            a.push_back({p.amplitudes(i).real(), p.amplitudes(i).imag()});
        }
        return a;
    }
    nlohmann::json operator()(const OutcomesPayload &p) const {
        return p.blocks;
    }
    nlohmann::json operator()(const ScalarPayload &p) const {
        return p.value;
    }
    nlohmann::json operator()(const ResultPayload &p) const {
        nlohmann::json o = nlohmann::json::object();
        if (p.estimate) {
            o["estimate"] = *p.estimate;
        }
        if (p.label) {
            o["label"] = *p.label;
        }
        return o;
    }
};

std::string hex64(std::uint64_t v) {
    static const char *digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; i--) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace

std::vector<std::uint8_t> encode_binary(const Payload &p) {
    std::vector<std::uint8_t> out;
    std::visit(BinaryEncoder{out}, p);
    return out;
}

Payload decode_binary(const std::vector<std::uint8_t> &bytes) {
    Reader r{bytes};
    auto tag = r.get<std::uint8_t>();
    Payload out;
    switch (tag) {
        case 0: {
            auto n = r.get<std::uint64_t>();
            ComplexVector v(static_cast<Eigen::Index>(n));
            for (Eigen::Index i = 0; i < v.size(); i++) {
                double re = r.get<double>();
                double im = r.get<double>();
                v(i) = Complex(re, im);
            }
            out = StateVectorPayload{std::move(v)};
            break;
        }
        case 1: {
            OutcomesPayload p;
            auto blocks = r.get<std::uint64_t>();
            for (std::uint64_t b = 0; b < blocks; b++) {
                Outcomes o(r.get<std::uint64_t>());
                for (auto &x : o) {
                    x = r.get<std::uint32_t>();
                }
                p.blocks.push_back(std::move(o));
            }
            out = std::move(p);
            break;
        }
        case 2:
            out = ScalarPayload{r.get<double>()};
            break;
        case 3: {
            ResultPayload p;
            auto flags = r.get<std::uint8_t>();
            double e = r.get<double>();
            auto l = r.get<std::int64_t>();
            if (flags & 1) {
                p.estimate = e;
            }
            if (flags & 2) {
                p.label = static_cast<int>(l);
            }
            out = p;
            break;
        }
        default:
            throw std::invalid_argument("decode_binary: unknown payload tag");
    }
    if (r.pos != bytes.size()) {
        throw std::invalid_argument("decode_binary: trailing bytes");
    }
    return out;
}

nlohmann::json payload_to_json(const Payload &p) {
    return std::visit(JsonEncoder{}, p);
}

Payload payload_from_json(const std::string &type, const nlohmann::json &j) {
    if (type == "state_vector") {
        ComplexVector v(static_cast<Eigen::Index>(j.size()));
        for (std::size_t i = 0; i < j.size(); i++) {
            v(static_cast<Eigen::Index>(i)) = Complex(j[i].at(0).get<double>(), j[i].at(1).get<double>());
        }
        return StateVectorPayload{std::move(v)};
    }
    if (type == "outcomes") {
        return OutcomesPayload{j.get<std::vector<Outcomes>>()};
    }
    if (type == "scalar") {
        return ScalarPayload{j.get<double>()};
    }
    if (type == "result") {
        ResultPayload r;
        if (j.contains("estimate")) {
            r.estimate = j["estimate"].get<double>();
        }
        if (j.contains("label")) {
            r.label = j["label"].get<int>();
        }
        return r;
    }
    throw std::invalid_argument("unknown payload type '" + type + "'");
}

std::string encode_frame(const std::string &run_id, const Message &m) {
    nlohmann::json f = {{"v", 1},
                        {"run", run_id},
                        {"round", m.round},
                        {"from", role_name(m.from)},
                        {"to", role_name(m.to)},
                        {"type", payload_type(m.payload)},
                        {"payload", payload_to_json(m.payload)}};
    return f.dump();
}

std::string encode_hello(const Hello &h) {
    nlohmann::json commitments = nlohmann::json::object();
    for (const auto &[who, c] : h.seed_commitments) {
        commitments[who] = c;
    }
    nlohmann::json f = {{"v", 1},
                        {"run", h.run_id},
                        {"round", 0},
                        {"from", "referee"},
                        {"to", "all"},
                        {"type", "hello"},
                        {"payload",
                         {{"d", h.d},
                          {"k", h.k},
                          {"setting", h.setting.token()},
                          {"seed_commitments", commitments}}}};
    return f.dump();
}

std::string encode_result_frame(const std::string &run_id, std::size_t round, const ResultPayload &r) {
    nlohmann::json f = {{"v", 1},          {"run", run_id},  {"round", round},
                        {"from", "referee"}, {"to", "all"},    {"type", "result"},
                        {"payload", payload_to_json(r)}};
    return f.dump();
}

DecodedFrame decode_frame(const std::string &line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
        if (j.at("v").get<int>() != 1) {
            throw std::invalid_argument("decode_frame: unsupported frame version");
        }
        return DecodedFrame{j.at("run").get<std::string>(), j.at("type").get<std::string>(),
                            j.at("round").get<std::size_t>(), j.at("from").get<std::string>(),
                            j.at("to").get<std::string>(), j.at("payload")};
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("decode_frame: ") + e.what());
    }
}

Message frame_to_message(const DecodedFrame &f) {
    return Message{f.round, parse_role(f.from), parse_role(f.to), payload_from_json(f.type, f.payload)};
}

Hello frame_to_hello(const DecodedFrame &f) {
    if (f.type != "hello") {
        throw std::invalid_argument("frame_to_hello: not a hello frame");
    }
    Hello h;
    h.run_id = f.run_id;
    h.d = f.payload.at("d").get<std::size_t>();
    h.k = f.payload.at("k").get<std::size_t>();
    h.setting = CommunicationSetting::parse(f.payload.at("setting").get<std::string>());
    for (const auto &[who, c] : f.payload.at("seed_commitments").items()) {
        h.seed_commitments.emplace_back(who, c.get<std::string>());
    }
    return h;
}

std::string commitment_hex(std::uint64_t key) {
    return hex64(mix64(key));
}

}  // namespace dqipe::protocol
