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

#include "hechordal/he.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace hechordal::he {
namespace {

constexpr uint128 kTwo64 = static_cast<uint128>(1) << 64;
constexpr std::uint64_t kMaxT = std::uint64_t{1} << 62;

std::int64_t max_abs_plain(std::uint64_t t) { return static_cast<std::int64_t>((t - 1) / 2); }

void check_plain_range(std::int64_t m, std::uint64_t t, const char* what) {
  const std::int64_t bound = max_abs_plain(t);
  if (m > bound || m < -bound) {
    throw PlaintextRangeError(std::string(what) + " " + std::to_string(m) +
                              " is outside the centered range [-" + std::to_string(bound) + ", " +
                              std::to_string(bound) + "]");
  }
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

std::uint32_t get_u32(std::span<const std::uint8_t> bytes, std::size_t offset) {
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < 4; ++i) v = (v << 8) | bytes[offset + i];
  return v;
}

std::size_t payload_width(const PublicKey& pk) {
  if (pk.backend == Backend::passthrough) return 8;
  const uint128 top = pk.q - 1;
  const auto hi = static_cast<std::uint64_t>(top >> 64);
  const auto lo = static_cast<std::uint64_t>(top);
  const std::size_t bits = hi != 0 ? 128 - std::countl_zero(hi) : 64 - std::countl_zero(lo);
  return std::max<std::size_t>(1, (bits + 7) / 8);
}

std::uint64_t fnv1a(std::uint64_t h, std::uint8_t byte) {
  return (h ^ byte) * 0x100000001b3ULL;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::passthrough:
      return "passthrough";
    case Backend::masked_residue:
      return "masked";
  }
  return "unknown";
}

Backend parse_backend(std::string_view name) {
  if (name == "masked" || name == "masked-residue" || name == "masked_residue") {
    return Backend::masked_residue;
  }
  if (name == "passthrough") return Backend::passthrough;
  throw ParamsError("unknown backend '" + std::string(name) + "'");
}

BudgetExceeded::BudgetExceeded(std::uint32_t level, std::uint32_t budget)
    : HeError("ciphertext level " + std::to_string(level) + " exceeds depth budget " +
              std::to_string(budget)),
      level_(level),
      budget_(budget) {}

std::uint64_t min_plaintext_modulus(std::size_t n) {
  return 4 * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) + 1;
}

HeParams HeParams::for_vertices(std::size_t n, Backend backend,
                                std::optional<std::uint32_t> budget, std::uint64_t seed) {
  HeParams p;
  p.backend = backend;
  p.t = std::bit_ceil(std::max<std::uint64_t>(min_plaintext_modulus(n), 4));
  p.q = static_cast<uint128>(p.t) << 64;
  p.budget = budget;
  p.seed = seed;
  p.validate();
  return p;
}

void HeParams::validate() const {
  if (t < 2) throw ParamsError("plaintext modulus t must be at least 2");
  if (t >= kMaxT) throw ParamsError("plaintext modulus t must be below 2^62");
  if (q == 0 || q % t != 0) throw ParamsError("ciphertext modulus q must be a multiple of t");
  const uint128 k = q / t;
  if (k < 2) throw ParamsError("q/t must be at least 2");
  if (k > kTwo64) throw ParamsError("q/t must not exceed 2^64");
}

std::uint64_t HeParams::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, static_cast<std::uint8_t>(backend));
  for (int shift = 56; shift >= 0; shift -= 8) h = fnv1a(h, static_cast<std::uint8_t>(t >> shift));
  for (int shift = 120; shift >= 0; shift -= 8) h = fnv1a(h, static_cast<std::uint8_t>(q >> shift));
  return h;
}

HeParams PublicKey::public_params() const {
  HeParams p;
  p.backend = backend;
  p.t = t;
  p.q = q;
  return p;
}

std::pair<PublicKey, SecretKey> keygen(const HeParams& params) {
  params.validate();
  const std::uint64_t digest = params.digest();
  PublicKey pk{params.backend, params.t, params.q, digest};
  SecretKey sk{params.backend, params.t, params.q, params.budget, digest};
  return {pk, sk};
}

// ---- Encryptor ----

Encryptor::Encryptor(PublicKey pk) : pk_(pk), k_(pk.q / pk.t) {}

Ciphertext Encryptor::encrypt(std::int64_t m, Rng& rng) const {
  check_plain_range(m, pk_.t, "plaintext");
  Ciphertext c;
  c.backend = pk_.backend;
  c.level = 0;
  c.digest = pk_.digest;
  if (pk_.backend == Backend::passthrough) {
    c.low = static_cast<std::uint64_t>(m);
    return c;
  }
  c.low = m >= 0 ? static_cast<std::uint64_t>(m) : pk_.t - static_cast<std::uint64_t>(-m);
  if (k_ == kTwo64) {
    c.high = rng();
  } else {
    const auto bound = static_cast<std::uint64_t>(k_);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    c.high = x % bound;
  }
  return c;
}

// ---- Decryptor ----

Decryptor::Decryptor(SecretKey sk) : sk_(sk) {}

std::int64_t Decryptor::decrypt(const Ciphertext& c) const {
  if (c.backend != sk_.backend || c.digest != sk_.digest) {
    throw ParamsMismatch("ciphertext was not produced under this key's parameters");
  }
  if (sk_.budget && c.level > *sk_.budget) throw BudgetExceeded(c.level, *sk_.budget);
  if (sk_.backend == Backend::passthrough) return static_cast<std::int64_t>(c.low);
  if (c.low <= sk_.t / 2) return static_cast<std::int64_t>(c.low);
  return -static_cast<std::int64_t>(sk_.t - c.low);
}

// ---- Evaluator ----

Evaluator::Evaluator(const PublicKey& pk)
    : backend_(pk.backend),
      t_(pk.t),
      k_(pk.q / pk.t),
      k_pow64_(pk.q / pk.t == kTwo64),
      t_small_(pk.t < (std::uint64_t{1} << 32)),
      digest_(pk.digest) {}

void Evaluator::check(const Ciphertext& c) const {
  if (c.backend != backend_ || c.digest != digest_) {
    throw ParamsMismatch("ciphertext backend or parameters do not match the evaluator");
  }
}

void Evaluator::check_pair(const Ciphertext& a, const Ciphertext& b) const {
  check(a);
  check(b);
}

Ciphertext Evaluator::add(const Ciphertext& a, const Ciphertext& b) const {
  Ciphertext r = a;
  add_inplace(r, b);
  return r;
}

void Evaluator::add_inplace(Ciphertext& acc, const Ciphertext& b) const {
  check_pair(acc, b);
  acc.level = std::max(acc.level, b.level);
  if (backend_ == Backend::passthrough) {
    std::int64_t out;
    if (__builtin_add_overflow(static_cast<std::int64_t>(acc.low), static_cast<std::int64_t>(b.low),
                               &out)) {
      throw HeError("passthrough addition overflow");
    }
    acc.low = static_cast<std::uint64_t>(out);
    return;
  }
  std::uint64_t lo = acc.low + b.low;
  const std::uint64_t carry = lo >= t_ ? 1 : 0;
  if (carry) lo -= t_;
  acc.low = lo;
  if (k_pow64_) {
    acc.high = acc.high + b.high + carry;
  } else {
    acc.high = reduce(static_cast<uint128>(acc.high) + b.high + carry);
  }
}

Ciphertext Evaluator::sub(const Ciphertext& a, const Ciphertext& b) const {
  check_pair(a, b);
  Ciphertext r = a;
  r.level = std::max(a.level, b.level);
  if (backend_ == Backend::passthrough) {
    std::int64_t out;
    if (__builtin_sub_overflow(static_cast<std::int64_t>(a.low), static_cast<std::int64_t>(b.low),
                               &out)) {
      throw HeError("passthrough subtraction overflow");
    }
    r.low = static_cast<std::uint64_t>(out);
    return r;
  }
  std::uint64_t borrow = 0;
  if (a.low >= b.low) {
    r.low = a.low - b.low;
  } else {
    r.low = a.low + t_ - b.low;
    borrow = 1;
  }
  if (k_pow64_) {
    r.high = a.high - b.high - borrow;
  } else {
    r.high = reduce(static_cast<uint128>(a.high) + 2 * k_ - b.high - borrow);
  }
  return r;
}

Ciphertext Evaluator::mul(const Ciphertext& a, const Ciphertext& b) const {
  check_pair(a, b);
  Ciphertext r = a;
  r.level = std::max(a.level, b.level) + 1;
  if (backend_ == Backend::passthrough) {
    std::int64_t out;
    if (__builtin_mul_overflow(static_cast<std::int64_t>(a.low), static_cast<std::int64_t>(b.low),
                               &out)) {
      throw HeError("passthrough multiplication overflow");
    }
    r.low = static_cast<std::uint64_t>(out);
    return r;
  }
  // (ha*t + la)(hb*t + lb) = t*(t*ha*hb + ha*lb + hb*la) + la*lb, and
  // la*lb = carry*t + residue; the bracket plus carry is taken mod q/t.
  std::uint64_t carry;
  if (t_small_) {
    const std::uint64_t prod = a.low * b.low;
    carry = prod / t_;
    r.low = prod % t_;
  } else {
    const uint128 prod = static_cast<uint128>(a.low) * b.low;
    carry = static_cast<std::uint64_t>(prod / t_);
    r.low = static_cast<std::uint64_t>(prod % t_);
  }
  if (k_pow64_) {
    r.high = t_ * a.high * b.high + a.high * b.low + b.high * a.low + carry;
  } else {
    const auto mulmod = [this](std::uint64_t x, std::uint64_t y) {
      return reduce(static_cast<uint128>(reduce(x)) * reduce(y));
    };
    const uint128 sum = static_cast<uint128>(mulmod(mulmod(t_, a.high), b.high)) +
                        mulmod(a.high, b.low) + mulmod(b.high, a.low) + reduce(carry);
    r.high = reduce(sum);
  }
  return r;
}

Ciphertext Evaluator::sub_plain(const Ciphertext& a, std::int64_t k) const {
  check(a);
  check_plain_range(k, t_, "constant");
  Ciphertext constant = a;
  constant.level = 0;
  if (backend_ == Backend::passthrough) {
    constant.low = static_cast<std::uint64_t>(k);
  } else if (k >= 0) {
    constant.high = 0;
    constant.low = static_cast<std::uint64_t>(k);
  } else {
    // q + k = (q/t - 1) * t + (t + k)
    constant.high = static_cast<std::uint64_t>(k_ - 1);
    constant.low = t_ - static_cast<std::uint64_t>(-k);
  }
  return sub(a, constant);
}

// ---- serialization ----

uint128 payload_value(const PublicKey& pk, const Ciphertext& c) {
  if (pk.backend == Backend::passthrough) return c.low;
  return static_cast<uint128>(c.high) * pk.t + c.low;
}

std::size_t serialized_size(const PublicKey& pk) { return 1 + 4 + 4 + payload_width(pk); }

void serialize(const PublicKey& pk, const Ciphertext& c, std::vector<std::uint8_t>& out) {
  if (c.backend != pk.backend || c.digest != pk.digest) {
    throw ParamsMismatch("ciphertext does not belong to this public key");
  }
  const std::size_t width = payload_width(pk);
  out.push_back(static_cast<std::uint8_t>(c.backend));
  put_u32(out, c.level);
  put_u32(out, static_cast<std::uint32_t>(width));
  const uint128 v = payload_value(pk, c);
  for (std::size_t i = width; i-- > 0;) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

Ciphertext deserialize(const PublicKey& pk, std::span<const std::uint8_t> bytes,
                       std::size_t& offset) {
  if (offset + 9 > bytes.size()) throw HeError("truncated ciphertext header");
  const std::uint8_t tag = bytes[offset];
  if (tag != static_cast<std::uint8_t>(Backend::passthrough) &&
      tag != static_cast<std::uint8_t>(Backend::masked_residue)) {
    throw HeError("unknown ciphertext backend tag");
  }
  if (tag != static_cast<std::uint8_t>(pk.backend)) {
    throw ParamsMismatch("ciphertext backend tag does not match the session backend");
  }
  Ciphertext c;
  c.backend = pk.backend;
  c.digest = pk.digest;
  c.level = get_u32(bytes, offset + 1);
  const std::uint32_t len = get_u32(bytes, offset + 5);
  offset += 9;
  if (len > 16 || (pk.backend == Backend::passthrough && len != 8)) {
    throw HeError("invalid ciphertext payload length");
  }
  if (offset + len > bytes.size()) throw HeError("truncated ciphertext payload");
  uint128 v = 0;
  for (std::uint32_t i = 0; i < len; ++i) v = (v << 8) | bytes[offset + i];
  offset += len;
  if (pk.backend == Backend::passthrough) {
    c.low = static_cast<std::uint64_t>(v);
    return c;
  }
  if (v >= pk.q) throw HeError("ciphertext payload is not below q");
  c.high = static_cast<std::uint64_t>(v / pk.t);
  c.low = static_cast<std::uint64_t>(v % pk.t);
  return c;
}

std::string to_string(uint128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

uint128 parse_uint128(std::string_view s) {
  if (s.empty()) throw ParamsError("empty integer");
  uint128 v = 0;
  const uint128 max = ~static_cast<uint128>(0);
  for (char ch : s) {
    if (ch < '0' || ch > '9') throw ParamsError("'" + std::string(s) + "' is not an integer");
    const unsigned digit = static_cast<unsigned>(ch - '0');
    if (v > (max - digit) / 10) throw ParamsError("integer '" + std::string(s) + "' too large");
    v = v * 10 + digit;
  }
  return v;
}

}  // namespace hechordal::he
