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

#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <thread>
#include <vector>

#include "hechordal/wire.hpp"
#include "socket.hpp"

namespace hechordal::wire {
namespace {

using Clock = std::chrono::steady_clock;

struct Frame {
  Message message;
  std::size_t bytes = 0;
};

Frame read_frame(net::Socket& sock, std::size_t max_message, const he::PublicKey* session) {
  std::uint8_t header[kHeaderSize];
  sock.recv_exact(header);
  const auto [len, type] = decode_header(header, max_message);
  std::vector<std::uint8_t> payload(len);
  sock.recv_exact(payload);
  return {decode_payload(type, payload, session), kHeaderSize + len};
}

std::size_t send_message(net::Socket& sock, const Message& m, const he::PublicKey& session) {
  const auto bytes = encode(m, session);
  sock.send_all(bytes);
  return bytes.size();
}

void send_abort(net::Socket& sock, AbortReason reason) noexcept {
  try {
    send_message(sock, TerminateMsg{Outcome::aborted, reason, 0}, {});
  } catch (...) {
  }
}

std::uint64_t parse_env_number(const char* name) {
  const char* raw = std::getenv(name);
  std::uint64_t value = 0;
  const std::string_view s(raw);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
    throw WireError(std::string(name) + " must be a positive integer, got '" + raw + "'");
  }
  return value;
}

Verdict aborted(AbortReason reason, std::uint32_t rounds, std::string detail) {
  Verdict v;
  v.outcome = Outcome::aborted;
  v.reason = reason;
  v.rounds_used = rounds;
  v.detail = std::move(detail);
  return v;
}

}  // namespace

SessionConfig SessionConfig::from_env() {
  SessionConfig cfg;
  if (std::getenv("HECHORDAL_TIMEOUT_MS")) {
    cfg.timeout = std::chrono::milliseconds(parse_env_number("HECHORDAL_TIMEOUT_MS"));
  }
  if (std::getenv("HECHORDAL_MAX_MSG")) {
    cfg.max_message = static_cast<std::size_t>(parse_env_number("HECHORDAL_MAX_MSG"));
  }
  return cfg;
}

void parse_endpoint(const std::string& endpoint, SessionConfig& cfg) {
  const auto colon = endpoint.rfind(':');
  if (colon == std::string::npos || colon + 1 == endpoint.size()) {
    throw WireError("endpoint '" + endpoint + "' is not of the form HOST:PORT");
  }
  std::string host = endpoint.substr(0, colon);
  if (host.size() >= 2 && host.front() == '[' && host.back() == ']') {
    host = host.substr(1, host.size() - 2);
  }
  const std::string_view port_text(endpoint.data() + colon + 1, endpoint.size() - colon - 1);
  unsigned port = 0;
  auto [ptr, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
  if (ec != std::errc() || ptr != port_text.data() + port_text.size() || port > 65535) {
    throw WireError("invalid port in endpoint '" + endpoint + "'");
  }
  cfg.host = host.empty() ? "0.0.0.0" : host;
  cfg.port = static_cast<std::uint16_t>(port);
}

// ---- Bob ----

void serve_session(int fd, const SessionConfig& cfg, he::Backend backend) {
  net::Socket sock(fd);
  try {
    sock.set_timeout(cfg.timeout);
    Frame first = read_frame(sock, cfg.max_message, nullptr);
    auto* init = std::get_if<InitMsg>(&first.message);
    if (init == nullptr || init->digest != init->pk.digest || init->pk.backend != backend) {
      send_abort(sock, AbortReason::negotiation);
      return;
    }
    BobState bob(init->pk, std::move(init->adjacency));
    CtVector mask = std::move(init->mask);
    while (true) {
      CtVector scores = bob_round(bob, mask);
      send_message(sock, ScoresMsg{bob.round, std::move(scores)}, bob.pk);
      Frame next = read_frame(sock, cfg.max_message, &bob.pk);
      if (auto* m = std::get_if<MaskMsg>(&next.message)) {
        if (m->round != bob.round + 1) throw MalformedFrame("out-of-order MASK round");
        mask = std::move(m->mask);
      } else if (auto* r = std::get_if<RefreshMsg>(&next.message)) {
        if (r->round != bob.round + 1) throw MalformedFrame("out-of-order REFRESH round");
        bob_refresh(bob, std::move(r->adjacency));
        mask = std::move(r->mask);
      } else if (std::holds_alternative<TerminateMsg>(next.message)) {
        return;
      } else {
        throw MalformedFrame("unexpected message type during session");
      }
    }
  } catch (const UnsupportedVersion&) {
    send_abort(sock, AbortReason::negotiation);
  } catch (const TransportError&) {
    // Peer went away; nothing to report to it.
  } catch (const std::exception& e) {
    std::cerr << "hechordal: session error: " << e.what() << '\n';
    send_abort(sock, AbortReason::negotiation);
  }
}

Server::Server(SessionConfig cfg, he::Backend backend) : cfg_(std::move(cfg)), backend_(backend) {}

Server::~Server() {
  if (listen_fd_ >= 0) ::close(listen_fd_);
}

std::uint16_t Server::listen() {
  net::Listener listener(cfg_.host, cfg_.port);
  cfg_.port = listener.port();
  listen_fd_ = listener.release();
  return cfg_.port;
}

void Server::stop() { stopping_ = true; }

void Server::handle(int fd) {
  serve_session(fd, cfg_, backend_);
  ++completed_;
}

void Server::run(std::size_t max_sessions) {
  if (listen_fd_ < 0) listen();
  std::vector<std::thread> workers;
  std::size_t accepted = 0;
  while (!stopping_ && (max_sessions == 0 || accepted < max_sessions)) {
    pollfd pfd{listen_fd_, POLLIN, 0};
    if (::poll(&pfd, 1, 100) <= 0) continue;
    const int fd = ::accept(listen_fd_, nullptr, nullptr);
    if (fd < 0) continue;
    ++accepted;
    workers.emplace_back([this, fd] { handle(fd); });
  }
  for (auto& w : workers) w.join();
}

void serve(const SessionConfig& cfg, he::Backend backend) {
  Server server(cfg, backend);
  const auto port = server.listen();
  std::cerr << "hechordal: Bob listening on " << cfg.host << ':' << port << " (backend "
            << he::backend_name(backend) << ")\n";
  server.run();
}

// ---- Alice ----

RunResult connect(const SessionConfig& cfg, const Graph& g, const he::HeParams& params,
                  ProtocolOptions options) {
  auto [alice, init] = alice_init(g, params, options);
  if (alice.finished()) return {*alice.verdict, alice.transcript};
  const std::size_t n = g.size();
  if (init_frame_size(alice.pk, n) > cfg.max_message) {
    throw OversizeMessage("INIT for n=" + std::to_string(n) + " exceeds the maximum message size");
  }

  const auto finish = [&alice](Verdict v) {
    alice.verdict = v;
    alice.transcript.verdict = v;
    return RunResult{v, alice.transcript};
  };

  try {
    net::Socket sock = net::connect_tcp(cfg.host, cfg.port, cfg.timeout);
    std::size_t sent = send_message(
        sock,
        InitMsg{kProtocolVersion, static_cast<std::uint32_t>(n), alice.pk.digest, alice.pk,
                std::move(init.adjacency), std::move(init.mask)},
        alice.pk);
    auto start = Clock::now();
    while (true) {
      Frame frame = read_frame(sock, cfg.max_message, &alice.pk);
      if (auto* t = std::get_if<TerminateMsg>(&frame.message)) {
        return finish(aborted(t->reason == AbortReason::none ? AbortReason::negotiation : t->reason,
                              alice.round - 1,
                              "peer aborted the session (" +
                                  std::string(abort_reason_name(t->reason)) + ")"));
      }
      auto* scores = std::get_if<ScoresMsg>(&frame.message);
      if (scores == nullptr || scores->round != alice.round || scores->scores.size() != n) {
        throw MalformedFrame("unexpected reply from peer");
      }
      auto step = alice_step(alice, scores->scores);
      if (!alice.transcript.rounds.empty() && alice.transcript.rounds.back().round == scores->round) {
        RoundRecord& rec = alice.transcript.rounds.back();
        rec.bytes_sent = sent;
        rec.bytes_received = frame.bytes;
        rec.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      }
      if (auto* verdict = std::get_if<Verdict>(&step)) {
        try {
          send_message(sock, TerminateMsg{verdict->outcome, verdict->reason, verdict->rounds_used},
                       alice.pk);
        } catch (const WireError&) {
          // The verdict is already decided locally.
        }
        return {*verdict, alice.transcript};
      }
      auto& next = std::get<NextMask>(step);
      start = Clock::now();
      if (next.adjacency) {
        sent = send_message(sock, RefreshMsg{next.round, std::move(*next.adjacency), std::move(next.mask)},
                            alice.pk);
      } else {
        sent = send_message(sock, MaskMsg{next.round, std::move(next.mask)}, alice.pk);
      }
    }
  } catch (const WireError& e) {
    return finish(aborted(AbortReason::transport, alice.round == 0 ? 0 : alice.round - 1, e.what()));
  }
}

}  // namespace hechordal::wire
