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

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dqipe/protocol/message.h"

namespace dqipe::protocol {

/// Binary payload layout used for byte accounting: a one-byte type tag, then
///   state_vector: u64 n, n x (f64 re, f64 im)
///   outcomes:     u64 blocks, per block u64 len and len x u32
///   scalar:       f64
///   result:       u8 flags (1 = estimate, 2 = label), f64 estimate, i64 label
/// All integers and floats little-endian.
std::vector<std::uint8_t> encode_binary(const Payload &p);
Payload decode_binary(const std::vector<std::uint8_t> &bytes);

nlohmann::json payload_to_json(const Payload &p);
Payload payload_from_json(const std::string &type, const nlohmann::json &j);

/// Fields of the hello frame that opens a run.
struct Hello {
    std::string run_id;
    std::size_t d = 0;
    std::size_t k = 0;
    CommunicationSetting setting;
    /// mix64 of each party's stream key, hex encoded; "shared" only when declared.
    std::vector<std::pair<std::string, std::string>> seed_commitments;
    bool operator==(const Hello &) const = default;
};

/// One newline-free JSON frame:
/// {"v":1,"run":..,"round":..,"from":..,"to":..,"type":..,"payload":..}.
std::string encode_frame(const std::string &run_id, const Message &m);
std::string encode_hello(const Hello &h);
/// The closing frame, from the referee to "all".
std::string encode_result_frame(const std::string &run_id, std::size_t round, const ResultPayload &r);

struct DecodedFrame {
    std::string run_id;
    std::string type;
    std::size_t round = 0;
    std::string from;
    std::string to;
    nlohmann::json payload;
};

/// Throws std::invalid_argument on malformed frames or a version other than 1.
DecodedFrame decode_frame(const std::string &line);
Message frame_to_message(const DecodedFrame &f);
Hello frame_to_hello(const DecodedFrame &f);

/// Hex of mix64(key), as announced in the hello frame.
std::string commitment_hex(std::uint64_t key);

}  // namespace dqipe::protocol
