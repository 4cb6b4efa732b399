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

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "dqipe/protocol/message.h"
#include "dqipe/protocol/wire.h"

namespace dqipe::protocol {

/// Carries messages between parties. carry() returns the message as the
/// receiving side sees it, so a lossy or non-bit-exact encoding would show up
/// in the transcript.
class Transport {
   public:
    virtual ~Transport() = default;
    virtual void open(const Hello &hello) = 0;
    virtual Message carry(const std::string &run_id, const Message &m) = 0;
    virtual ResultPayload close(const std::string &run_id, std::size_t round, const ResultPayload &r) = 0;
    virtual std::string name() const = 0;
};

class InProcTransport : public Transport {
   public:
    void open(const Hello &) override {}
    Message carry(const std::string &, const Message &m) override {
        return m;
    }
    ResultPayload close(const std::string &, std::size_t, const ResultPayload &r) override {
        return r;
    }
    std::string name() const override {
        return "inproc";
    }
};

/// Frames travel over a real TCP connection on the given interface: the
/// transport listens, connects to itself, and a reader thread turns incoming
/// newline-delimited frames back into messages.
class TcpTransport : public Transport {
   public:
    /// port 0 picks an ephemeral port.
    explicit TcpTransport(const std::string &host = "127.0.0.1", std::uint16_t port = 0);
    ~TcpTransport() override;
    TcpTransport(const TcpTransport &) = delete;
    TcpTransport &operator=(const TcpTransport &) = delete;

    void open(const Hello &hello) override;
    Message carry(const std::string &run_id, const Message &m) override;
    ResultPayload close(const std::string &run_id, std::size_t round, const ResultPayload &r) override;
    std::string name() const override;

    std::uint16_t port() const {
        return port_;
    }
    /// Frames written so far, for inspection.
    std::size_t frames_sent() const {
        return frames_sent_;
    }

   private:
    void write_line(const std::string &line);
    std::string read_line();
    void reader_loop();

    std::string host_;
    std::uint16_t port_ = 0;
    int listen_fd_ = -1;
    int write_fd_ = -1;
    int read_fd_ = -1;
    std::size_t frames_sent_ = 0;
    std::thread reader_;
    std::mutex mu_;
    std::condition_variable cv_;
    std::deque<std::string> lines_;
    bool eof_ = false;
    std::string reader_error_;
};

/// "inproc" or "tcp:<host>:<port>" (also "tcp" for 127.0.0.1 on an ephemeral port).
std::unique_ptr<Transport> make_transport(const std::string &spec);

}  // namespace dqipe::protocol
