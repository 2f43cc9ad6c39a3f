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

// Homomorphic-encryption contract with two backends.
//
// passthrough     ciphertext payload is the plaintext itself; for logic tests.
// masked_residue  payload is (m mod t) + t*r mod q, q a multiple of t, r
//                 uniform in [0, q/t). Arithmetic mod q preserves the residue
//                 mod t exactly, so the depth limit of a leveled scheme is
//                 modeled by a per-ciphertext level counter checked against
//                 a budget at decryption time.
//
// Neither backend is cryptographically secure. The masked-residue scheme
// leaks the plaintext to anyone who knows t, and t travels with the public
// key. It reproduces the interface and the failure modes of leveled HE, not
// its security.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hechordal::he {

using uint128 = unsigned __int128;
using Rng = std::mt19937_64;

enum class Backend : std::uint8_t { passthrough = 0x01, masked_residue = 0x02 };

std::string_view backend_name(Backend b);
// Accepts "masked", "masked-residue" and "passthrough".
Backend parse_backend(std::string_view name);

class HeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParamsError : public HeError {
 public:
  using HeError::HeError;
};

class ParamsMismatch : public HeError {
 public:
  using HeError::HeError;
};

class PlaintextRangeError : public HeError {
 public:
  using HeError::HeError;
};

class BudgetExceeded : public HeError {
 public:
  BudgetExceeded(std::uint32_t level, std::uint32_t budget);
  std::uint32_t level() const { return level_; }
  std::uint32_t budget() const { return budget_; }

 private:
  std::uint32_t level_;
  std::uint32_t budget_;
};

// Smallest plaintext modulus that holds every protocol intermediate for an
// n-vertex graph with twofold headroom: 4n^2 + 1.
std::uint64_t min_plaintext_modulus(std::size_t n);

struct HeParams {
  Backend backend = Backend::masked_residue;
  std::uint64_t t = 0;  // plaintext modulus
  uint128 q = 0;        // ciphertext modulus, multiple of t
  std::optional<std::uint32_t> budget;  // multiplicative depth; nullopt = unbounded
  std::uint64_t seed = 0;

  // t = next power of two >= max(4n^2+1, 4), q = t * 2^64.
  static HeParams for_vertices(std::size_t n, Backend backend = Backend::masked_residue,
                               std::optional<std::uint32_t> budget = std::nullopt,
                               std::uint64_t seed = 0);

  void validate() const;
  bool supports_vertices(std::size_t n) const { return t >= min_plaintext_modulus(n); }

  // Digest over the public parameters (backend, t, q). Budget and seed are
  // local to the key holder and do not enter it.
  std::uint64_t digest() const;
};

struct PublicKey {
  Backend backend = Backend::masked_residue;
  std::uint64_t t = 0;
  uint128 q = 0;
  std::uint64_t digest = 0;

  HeParams public_params() const;

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

struct SecretKey {
  Backend backend = Backend::masked_residue;
  std::uint64_t t = 0;
  uint128 q = 0;
  std::optional<std::uint32_t> budget;
  std::uint64_t digest = 0;
};

std::pair<PublicKey, SecretKey> keygen(const HeParams& params);

// Opaque encrypted integer. For masked_residue the payload integer is
// high * t + low with low in [0, t) and high in [0, q/t); for passthrough
// low holds the two's-complement plaintext and high is zero.
struct Ciphertext {
  Backend backend = Backend::masked_residue;
  std::uint32_t level = 0;
  std::uint64_t digest = 0;
  std::uint64_t high = 0;
  std::uint64_t low = 0;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

class Encryptor {
 public:
  explicit Encryptor(PublicKey pk);

  // |m| <= (t-1)/2. Fresh ciphertexts have level 0.
  Ciphertext encrypt(std::int64_t m, Rng& rng) const;

  const PublicKey& public_key() const { return pk_; }

 private:
  PublicKey pk_;
  uint128 k_;  // q / t
};

class Decryptor {
 public:
  explicit Decryptor(SecretKey sk);

  // Centered representative in (-t/2, t/2]. Throws BudgetExceeded when the
  // ciphertext level is above the budget.
  std::int64_t decrypt(const Ciphertext& c) const;

 private:
  SecretKey sk_;
};

// Ciphertext arithmetic. Levels: add/sub take the max of the operands, mul
// takes max + 1, plaintext-constant subtraction keeps the level.
class Evaluator {
 public:
  explicit Evaluator(const PublicKey& pk);

  Ciphertext add(const Ciphertext& a, const Ciphertext& b) const;
  Ciphertext sub(const Ciphertext& a, const Ciphertext& b) const;
  Ciphertext mul(const Ciphertext& a, const Ciphertext& b) const;
  Ciphertext sub_plain(const Ciphertext& a, std::int64_t k) const;

  void add_inplace(Ciphertext& acc, const Ciphertext& b) const;

  void check(const Ciphertext& c) const;
  Backend backend() const { return backend_; }
  std::uint64_t digest() const { return digest_; }

 private:
  std::uint64_t reduce(uint128 x) const {
    return k_pow64_ ? static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x % k_);
  }
  void check_pair(const Ciphertext& a, const Ciphertext& b) const;

  Backend backend_;
  std::uint64_t t_;
  uint128 k_;
  bool k_pow64_;
  bool t_small_;  // t < 2^32: residue products fit 64 bits
  std::uint64_t digest_;
};

inline Ciphertext encrypt(const PublicKey& pk, std::int64_t m, Rng& rng) {
  return Encryptor(pk).encrypt(m, rng);
}
inline std::int64_t decrypt(const SecretKey& sk, const Ciphertext& c) {
  return Decryptor(sk).decrypt(c);
}

// Payload as an integer in [0, q) (masked_residue) or the raw plaintext
// reinterpreted as unsigned (passthrough).
uint128 payload_value(const PublicKey& pk, const Ciphertext& c);

// Byte layout: backend tag (1), level (u32 BE), payload length (u32 BE),
// payload magnitude bytes BE. Masked-residue payloads use a fixed width of
// ceil(bits(q-1)/8) bytes; passthrough payloads are 8 bytes two's complement.
std::size_t serialized_size(const PublicKey& pk);
void serialize(const PublicKey& pk, const Ciphertext& c, std::vector<std::uint8_t>& out);
// Reads one ciphertext at offset and advances it. Throws HeError on
// truncation, bad tag or payload >= q.
Ciphertext deserialize(const PublicKey& pk, std::span<const std::uint8_t> bytes,
                       std::size_t& offset);

std::string to_string(uint128 v);
// Decimal string to uint128; throws ParamsError on bad input.
uint128 parse_uint128(std::string_view s);

}  // namespace hechordal::he
