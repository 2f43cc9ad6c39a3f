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

#include <optional>
#include <string>

#include "hechordal/wire.hpp"

namespace hechordal::wire {
namespace {

class Writer {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u16(std::uint16_t v) { be(v, 2); }
  void u32(std::uint32_t v) { be(v, 4); }
  void u64(std::uint64_t v) { be(v, 8); }
  void u128(he::uint128 v) {
    u64(static_cast<std::uint64_t>(v >> 64));
    u64(static_cast<std::uint64_t>(v));
  }
  void vector(const he::PublicKey& pk, const CtVector& v) {
    u32(static_cast<std::uint32_t>(v.size()));
    for (const auto& c : v) he::serialize(pk, c, buf_);
  }
  void matrix(const he::PublicKey& pk, const CtMatrix& m) { vector(pk, m.entries()); }

  std::vector<std::uint8_t> frame(MessageType type) && {
    const auto len = buf_.size();
    if (len > UINT32_MAX) throw OversizeMessage("payload does not fit a 32-bit length");
    std::vector<std::uint8_t> out;
    out.reserve(kHeaderSize + len);
    for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(len >> shift));
    out.push_back(static_cast<std::uint8_t>(type));
    out.insert(out.end(), buf_.begin(), buf_.end());
    return out;
  }

 private:
  void be(std::uint64_t v, int bytes) {
    for (int i = bytes - 1; i >= 0; --i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  std::vector<std::uint8_t> buf_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint8_t u8() { return static_cast<std::uint8_t>(be(1)); }
  std::uint16_t u16() { return static_cast<std::uint16_t>(be(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(be(4)); }
  std::uint64_t u64() { return be(8); }
  he::uint128 u128() {
    const he::uint128 hi = u64();
    return (hi << 64) | u64();
  }

  // Reads a count-prefixed ciphertext array, optionally checking the count.
  CtVector vector(const he::PublicKey& pk, std::optional<std::size_t> expected = std::nullopt) {
    const std::uint32_t count = u32();
    if (expected && count != *expected) {
      throw MalformedFrame("ciphertext count " + std::to_string(count) + ", expected " +
                           std::to_string(*expected));
    }
    // Each ciphertext takes at least 9 bytes; reject impossible counts early.
    if (static_cast<std::size_t>(count) * 9 > bytes_.size() - pos_) {
      throw MalformedFrame("truncated ciphertext array");
    }
    CtVector out;
    out.reserve(count);
    try {
      for (std::uint32_t i = 0; i < count; ++i) out.push_back(he::deserialize(pk, bytes_, pos_));
    } catch (const he::HeError& e) {
      throw MalformedFrame(std::string("bad ciphertext: ") + e.what());
    }
    return out;
  }

  void finish() const {
    if (pos_ != bytes_.size()) throw MalformedFrame("trailing bytes after payload");
  }

 private:
  std::uint64_t be(std::size_t n) {
    if (pos_ + n > bytes_.size()) throw MalformedFrame("truncated payload");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < n; ++i) v = (v << 8) | bytes_[pos_ + i];
    pos_ += n;
    return v;
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

const he::PublicKey& require_session(const he::PublicKey* session) {
  if (session == nullptr) throw MalformedFrame("ciphertext message before INIT");
  return *session;
}

Outcome parse_outcome(std::uint8_t b) {
  if (b < 0x01 || b > 0x03) throw MalformedFrame("unknown verdict code");
  return static_cast<Outcome>(b);
}

AbortReason parse_reason(std::uint8_t b) {
  if (b > 0x03) throw MalformedFrame("unknown abort reason");
  return static_cast<AbortReason>(b);
}

constexpr std::size_t kCountBytes = 4;

}  // namespace

MessageType type_of(const Message& m) {
  return std::visit(
      [](const auto& msg) {
        using T = std::decay_t<decltype(msg)>;
        if constexpr (std::is_same_v<T, InitMsg>) return MessageType::init;
        else if constexpr (std::is_same_v<T, ScoresMsg>) return MessageType::scores;
        else if constexpr (std::is_same_v<T, MaskMsg>) return MessageType::mask;
        else if constexpr (std::is_same_v<T, RefreshMsg>) return MessageType::refresh;
        else return MessageType::terminate;
      },
      m);
}

std::vector<std::uint8_t> encode(const Message& m, const he::PublicKey& session) {
  Writer w;
  std::visit(
      [&](const auto& msg) {
        using T = std::decay_t<decltype(msg)>;
        if constexpr (std::is_same_v<T, InitMsg>) {
          w.u8(msg.version);
          w.u32(msg.n);
          w.u64(msg.digest);
          w.u8(static_cast<std::uint8_t>(msg.pk.backend));
          w.u64(msg.pk.t);
          w.u128(msg.pk.q);
          w.matrix(msg.pk, msg.adjacency);
          w.vector(msg.pk, msg.mask);
        } else if constexpr (std::is_same_v<T, ScoresMsg>) {
          w.u32(msg.round);
          w.vector(session, msg.scores);
        } else if constexpr (std::is_same_v<T, MaskMsg>) {
          w.u32(msg.round);
          w.vector(session, msg.mask);
        } else if constexpr (std::is_same_v<T, RefreshMsg>) {
          w.u32(msg.round);
          w.matrix(session, msg.adjacency);
          w.vector(session, msg.mask);
        } else {
          w.u8(static_cast<std::uint8_t>(msg.verdict));
          w.u8(static_cast<std::uint8_t>(msg.reason));
          w.u16(0);
          w.u32(msg.rounds_used);
        }
      },
      m);
  return std::move(w).frame(type_of(m));
}

std::pair<std::uint32_t, MessageType> decode_header(std::span<const std::uint8_t> header,
                                                    std::size_t max_message) {
  if (header.size() < kHeaderSize) throw MalformedFrame("truncated frame header");
  std::uint32_t len = 0;
  for (std::size_t i = 0; i < 4; ++i) len = (len << 8) | header[i];
  if (len > max_message) {
    throw OversizeMessage("declared payload of " + std::to_string(len) +
                          " bytes exceeds the limit of " + std::to_string(max_message));
  }
  const std::uint8_t type = header[4];
  if (type < 0x01 || type > 0x05) {
    throw MalformedFrame("unknown message type " + std::to_string(type));
  }
  return {len, static_cast<MessageType>(type)};
}

Message decode_payload(MessageType type, std::span<const std::uint8_t> payload,
                       const he::PublicKey* session) {
  Reader r(payload);
  switch (type) {
    case MessageType::init: {
      InitMsg msg;
      msg.version = r.u8();
      if (msg.version != kProtocolVersion) {
        throw UnsupportedVersion("protocol version " + std::to_string(msg.version) +
                                 " is not supported (expected " +
                                 std::to_string(kProtocolVersion) + ")");
      }
      msg.n = r.u32();
      msg.digest = r.u64();
      he::HeParams params;
      const std::uint8_t backend = r.u8();
      if (backend != 0x01 && backend != 0x02) throw MalformedFrame("unknown backend tag");
      params.backend = static_cast<he::Backend>(backend);
      params.t = r.u64();
      params.q = r.u128();
      try {
        params.validate();
      } catch (const he::ParamsError& e) {
        throw MalformedFrame(std::string("invalid public parameters: ") + e.what());
      }
      msg.pk = he::PublicKey{params.backend, params.t, params.q, params.digest()};
      const std::size_t n = msg.n;
      msg.adjacency = CtMatrix(n, r.vector(msg.pk, n * n));
      msg.mask = r.vector(msg.pk, n);
      r.finish();
      return msg;
    }
    case MessageType::scores:
    case MessageType::mask: {
      const auto& pk = require_session(session);
      const std::uint32_t round = r.u32();
      CtVector v = r.vector(pk);
      r.finish();
      if (type == MessageType::scores) return ScoresMsg{round, std::move(v)};
      return MaskMsg{round, std::move(v)};
    }
    case MessageType::refresh: {
      const auto& pk = require_session(session);
      RefreshMsg msg;
      msg.round = r.u32();
      CtVector entries = r.vector(pk);
      std::size_t n = 0;
      while (n * n < entries.size()) ++n;
      if (n * n != entries.size()) throw MalformedFrame("refresh matrix entry count is not a square");
      msg.adjacency = CtMatrix(n, std::move(entries));
      msg.mask = r.vector(pk, n);
      r.finish();
      return msg;
    }
    case MessageType::terminate: {
      TerminateMsg msg;
      msg.verdict = parse_outcome(r.u8());
      msg.reason = parse_reason(r.u8());
      if (r.u16() != 0) throw MalformedFrame("reserved bytes must be zero");
      msg.rounds_used = r.u32();
      r.finish();
      return msg;
    }
  }
  throw MalformedFrame("unknown message type");
}

Message decode(std::span<const std::uint8_t> frame, const he::PublicKey* session,
               std::size_t max_message) {
  const auto [len, type] = decode_header(frame, max_message);
  if (frame.size() - kHeaderSize != len) {
    throw MalformedFrame("frame length " + std::to_string(frame.size() - kHeaderSize) +
                         " does not match declared payload length " + std::to_string(len));
  }
  return decode_payload(type, frame.subspan(kHeaderSize), session);
}

std::size_t init_frame_size(const he::PublicKey& pk, std::size_t n) {
  const std::size_t ct = he::serialized_size(pk);
  return kHeaderSize + 1 + 4 + 8 + 1 + 8 + 16 + kCountBytes + n * n * ct +
         kCountBytes + n * ct;
}

std::size_t vector_frame_size(const he::PublicKey& pk, std::size_t n) {
  return kHeaderSize + 4 + kCountBytes + n * he::serialized_size(pk);
}

std::size_t refresh_frame_size(const he::PublicKey& pk, std::size_t n) {
  const std::size_t ct = he::serialized_size(pk);
  return kHeaderSize + 4 + kCountBytes + n * n * ct + kCountBytes +
         n * ct;
}

}  // namespace hechordal::wire
