// Copyright 2026 The hechordal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

namespace hechordal::wire::net {

// Owning TCP socket. Reads and writes are blocking with the configured
// timeout; every failure, timeout and EOF surfaces as TransportError.
class Socket {
 public:
  Socket() = default;
  explicit Socket(int fd) : fd_(fd) {}
  ~Socket();
  Socket(Socket&& other) noexcept : fd_(other.release()) {}
  Socket& operator=(Socket&& other) noexcept;
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;

  int fd() const { return fd_; }
  int release() {
    const int fd = fd_;
    fd_ = -1;
    return fd;
  }
  void close();

  void set_timeout(std::chrono::milliseconds timeout);
  void send_all(std::span<const std::uint8_t> bytes);
  void recv_exact(std::span<std::uint8_t> out);

 private:
  int fd_ = -1;
};

Socket connect_tcp(const std::string& host, std::uint16_t port, std::chrono::milliseconds timeout);

class Listener {
 public:
  Listener() = default;
  Listener(const std::string& host, std::uint16_t port);

  std::uint16_t port() const { return port_; }
  int fd() const { return sock_.fd(); }
  void close() { sock_.close(); }
  int release() { return sock_.release(); }

  // Waits up to poll for a connection.
  std::optional<Socket> accept(std::chrono::milliseconds poll);

 private:
  Socket sock_;
  std::uint16_t port_ = 0;
};

}  // namespace hechordal::wire::net
