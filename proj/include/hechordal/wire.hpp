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

// Binary framing for running Alice and Bob as separate processes.
//
// frame   := length:u32be type:u8 payload[length]
// INIT    := version:u8 n:u32 digest:u64 backend:u8 t:u64 q:u128
//            count:u32 ciphertext[n*n] count:u32 ciphertext[n]
// SCORES  := round:u32 count:u32 ciphertext[n]
// MASK    := round:u32 count:u32 ciphertext[n]
// TERMINATE := verdict:u8 reason:u8 reserved:u16 rounds_used:u32
// REFRESH := round:u32 count:u32 ciphertext[n*n] count:u32 ciphertext[n]
//
// Ciphertexts use the he::serialize layout. All integers are big-endian.

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hechordal/enc_linalg.hpp"
#include "hechordal/he.hpp"
#include "hechordal/protocol.hpp"

namespace hechordal::wire {

inline constexpr std::uint8_t kProtocolVersion = 1;
inline constexpr std::size_t kDefaultMaxMessage = std::size_t{64} << 20;
inline constexpr std::size_t kHeaderSize = 5;

enum class MessageType : std::uint8_t {
  init = 0x01,
  scores = 0x02,
  mask = 0x03,
  terminate = 0x04,
  refresh = 0x05,
};

class WireError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedFrame : public WireError {
 public:
  using WireError::WireError;
};

class UnsupportedVersion : public WireError {
 public:
  using WireError::WireError;
};

class OversizeMessage : public WireError {
 public:
  using WireError::WireError;
};

class TransportError : public WireError {
 public:
  using WireError::WireError;
};

struct InitMsg {
  std::uint8_t version = kProtocolVersion;
  std::uint32_t n = 0;
  std::uint64_t digest = 0;  // as sent; compare with pk.digest
  he::PublicKey pk;          // digest recomputed from (backend, t, q)
  CtMatrix adjacency;
  CtVector mask;

  friend bool operator==(const InitMsg&, const InitMsg&) = default;
};

struct ScoresMsg {
  std::uint32_t round = 0;
  CtVector scores;
  friend bool operator==(const ScoresMsg&, const ScoresMsg&) = default;
};

struct MaskMsg {
  std::uint32_t round = 0;
  CtVector mask;
  friend bool operator==(const MaskMsg&, const MaskMsg&) = default;
};

struct RefreshMsg {
  std::uint32_t round = 0;
  CtMatrix adjacency;
  CtVector mask;
  friend bool operator==(const RefreshMsg&, const RefreshMsg&) = default;
};

struct TerminateMsg {
  Outcome verdict = Outcome::aborted;
  AbortReason reason = AbortReason::none;
  std::uint32_t rounds_used = 0;
  friend bool operator==(const TerminateMsg&, const TerminateMsg&) = default;
};

using Message = std::variant<InitMsg, ScoresMsg, MaskMsg, RefreshMsg, TerminateMsg>;

MessageType type_of(const Message& m);

// Encodes a full frame. Ciphertexts in SCORES/MASK/REFRESH are serialized
// under session; INIT uses its own public key.
std::vector<std::uint8_t> encode(const Message& m, const he::PublicKey& session = {});

// Decodes one complete frame. session is needed for every type except INIT
// and TERMINATE.
Message decode(std::span<const std::uint8_t> frame, const he::PublicKey* session = nullptr,
               std::size_t max_message = kDefaultMaxMessage);

// Parses the 5-byte header; throws OversizeMessage past max_message.
std::pair<std::uint32_t, MessageType> decode_header(std::span<const std::uint8_t> header,
                                                    std::size_t max_message);
Message decode_payload(MessageType type, std::span<const std::uint8_t> payload,
                       const he::PublicKey* session);

// Frame sizes without encoding.
std::size_t init_frame_size(const he::PublicKey& pk, std::size_t n);
std::size_t vector_frame_size(const he::PublicKey& pk, std::size_t n);
std::size_t refresh_frame_size(const he::PublicKey& pk, std::size_t n);
inline constexpr std::size_t kTerminateFrameSize = kHeaderSize + 8;

// ---- transport ----

struct SessionConfig {
  std::string host = "127.0.0.1";
  std::uint16_t port = 0;
  std::chrono::milliseconds timeout{30000};
  std::size_t max_message = kDefaultMaxMessage;

  // Defaults overridden by HECHORDAL_TIMEOUT_MS and HECHORDAL_MAX_MSG.
  static SessionConfig from_env();
};

// "host:port"; throws WireError on malformed input.
void parse_endpoint(const std::string& endpoint, SessionConfig& cfg);

// Bob's side. Accepts connections and runs one independent session per
// connection on its own thread.
class Server {
 public:
  Server(SessionConfig cfg, he::Backend backend);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds and listens; returns the bound port (useful with port 0).
  std::uint16_t listen();

  // Accepts until stop() is called or max_sessions sessions (0 = unlimited)
  // have been accepted, then waits for running sessions to finish.
  void run(std::size_t max_sessions = 0);
  void stop();

  std::size_t sessions_completed() const { return completed_.load(); }

 private:
  void handle(int fd);

  SessionConfig cfg_;
  he::Backend backend_;
  int listen_fd_ = -1;
  std::atomic<bool> stopping_{false};
  std::atomic<std::size_t> completed_{0};
};

// Convenience: listen on cfg and serve until stopped.
void serve(const SessionConfig& cfg, he::Backend backend);

// Alice's side: drives the same state machine as run_local over TCP.
// Transport failures and negotiation failures come back as ABORTED verdicts.
RunResult connect(const SessionConfig& cfg, const Graph& g, const he::HeParams& params,
                  ProtocolOptions options = {});

// Runs one Bob session over an already connected socket. Exposed for tests.
void serve_session(int fd, const SessionConfig& cfg, he::Backend backend);

}  // namespace hechordal::wire
