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

#include "dqipe/protocol/transport.h"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <stdexcept>
#include <system_error>

namespace dqipe::protocol {

namespace {

[[noreturn]] void fail(const std::string &what) {
    throw std::system_error(errno, std::generic_category(), "TcpTransport: " + what);
}

void close_fd(int &fd) {
    if (fd >= 0) {
        ::close(fd);
        fd = -1;
    }
}

}  // namespace

TcpTransport::TcpTransport(const std::string &host, std::uint16_t port) : host_(host) {
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
        throw std::invalid_argument("TcpTransport: not an IPv4 address: " + host);
    }
    listen_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (listen_fd_ < 0) {
        fail("socket");
    }
    int one = 1;
    ::setsockopt(listen_fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
    if (::bind(listen_fd_, reinterpret_cast<sockaddr *>(&addr), sizeof(addr)) != 0 || ::listen(listen_fd_, 1) != 0) {
        int e = errno;
        close_fd(listen_fd_);
        errno = e;
        fail("bind/listen on " + host + ":" + std::to_string(port));
    }
    socklen_t len = sizeof(addr);
    ::getsockname(listen_fd_, reinterpret_cast<sockaddr *>(&addr), &len);
    port_ = ntohs(addr.sin_port);

    write_fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (write_fd_ < 0 || ::connect(write_fd_, reinterpret_cast<sockaddr *>(&addr), sizeof(addr)) != 0) {
        int e = errno;
        close_fd(write_fd_);
        close_fd(listen_fd_);
        errno = e;
        fail("connect");
    }
    ::setsockopt(write_fd_, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
    read_fd_ = ::accept(listen_fd_, nullptr, nullptr);
    if (read_fd_ < 0) {
        int e = errno;
        close_fd(write_fd_);
        close_fd(listen_fd_);
        errno = e;
        fail("accept");
    }
    reader_ = std::thread([this] { reader_loop(); });
}

TcpTransport::~TcpTransport() {
    if (write_fd_ >= 0) {
        ::shutdown(write_fd_, SHUT_WR);
    }
    if (reader_.joinable()) {
        reader_.join();
    }
    close_fd(write_fd_);
    close_fd(read_fd_);
    close_fd(listen_fd_);
}

void TcpTransport::reader_loop() {
    std::string pending;
    char buf[1 << 16];
    for (;;) {
        ssize_t n = ::recv(read_fd_, buf, sizeof(buf), 0);
        if (n < 0 && errno == EINTR) {
            continue;
        }
        std::lock_guard<std::mutex> lock(mu_);
        if (n < 0) {
            reader_error_ = std::strerror(errno);
            eof_ = true;
            cv_.notify_all();
            return;
        }
        if (n == 0) {
            eof_ = true;
            cv_.notify_all();
            return;
        }
        pending.append(buf, static_cast<std::size_t>(n));
        std::size_t start = 0;
        for (std::size_t nl; (nl = pending.find('\n', start)) != std::string::npos; start = nl + 1) {
            lines_.push_back(pending.substr(start, nl - start));
        }
        pending.erase(0, start);
        cv_.notify_all();
    }
}

void TcpTransport::write_line(const std::string &line) {
    std::string data = line + "\n";
    const char *p = data.data();
    std::size_t left = data.size();
    while (left > 0) {
        ssize_t n = ::send(write_fd_, p, left, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) {
                continue;
            }
            fail("send");
        }
        p += n;
        left -= static_cast<std::size_t>(n);
    }
    frames_sent_++;
}

std::string TcpTransport::read_line() {
    std::unique_lock<std::mutex> lock(mu_);
    cv_.wait(lock, [this] { return !lines_.empty() || eof_; });
    if (lines_.empty()) {
        throw std::runtime_error("TcpTransport: connection closed" +
                                 (reader_error_.empty() ? std::string() : ": " + reader_error_));
    }
    std::string line = std::move(lines_.front());
    lines_.pop_front();
    return line;
}

void TcpTransport::open(const Hello &hello) {
    write_line(encode_hello(hello));
    Hello echoed = frame_to_hello(decode_frame(read_line()));
    if (!(echoed == hello)) {
        throw std::runtime_error("TcpTransport: hello frame did not survive the round trip");
    }
}

Message TcpTransport::carry(const std::string &run_id, const Message &m) {
    write_line(encode_frame(run_id, m));
    DecodedFrame f = decode_frame(read_line());
    if (f.run_id != run_id) {
        throw std::runtime_error("TcpTransport: frame for run " + f.run_id + " while running " + run_id);
    }
    return frame_to_message(f);
}

ResultPayload TcpTransport::close(const std::string &run_id, std::size_t round, const ResultPayload &r) {
    write_line(encode_result_frame(run_id, round, r));
    DecodedFrame f = decode_frame(read_line());
    if (f.type != "result" || f.run_id != run_id) {
        throw std::runtime_error("TcpTransport: expected the result frame of run " + run_id);
    }
    return std::get<ResultPayload>(payload_from_json("result", f.payload));
}

std::string TcpTransport::name() const {
    return "tcp:" + host_ + ":" + std::to_string(port_);
}

std::unique_ptr<Transport> make_transport(const std::string &spec) {
    if (spec == "inproc") {
        return std::make_unique<InProcTransport>();
    }
    if (spec == "tcp") {
        return std::make_unique<TcpTransport>();
    }
    const std::string prefix = "tcp:";
    if (spec.rfind(prefix, 0) == 0) {
        std::string rest = spec.substr(prefix.size());
        auto colon = rest.rfind(':');
        if (colon == std::string::npos) {
            return std::make_unique<TcpTransport>(rest, 0);
        }
        unsigned long port = std::stoul(rest.substr(colon + 1));
        if (port > 65535) {
            throw std::invalid_argument("make_transport: port out of range in '" + spec + "'");
        }
        return std::make_unique<TcpTransport>(rest.substr(0, colon), static_cast<std::uint16_t>(port));
    }
    throw std::invalid_argument("make_transport: unknown transport '" + spec + "'");
}

}  // namespace dqipe::protocol
