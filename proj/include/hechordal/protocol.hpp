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

// Interactive chordality check on an encrypted adjacency matrix.
//
// Alice (data owner) holds the keys and the plaintext graph. Bob (compute
// agent) holds only the public key and ciphertexts. Each round Bob masks his
// matrix with the encrypted 0/1 survival vector Alice sent, evaluates the
// simplicial score of every vertex and returns the encrypted scores. Alice
// decrypts, marks zero-score vertices as removed and either stops or sends a
// freshly encrypted mask.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hechordal/enc_linalg.hpp"
#include "hechordal/graph.hpp"
#include "hechordal/he.hpp"

namespace hechordal {

enum class Outcome : std::uint8_t { chordal = 0x01, not_chordal = 0x02, aborted = 0x03 };

enum class AbortReason : std::uint8_t { none = 0, budget = 1, transport = 2, negotiation = 3 };

struct Verdict {
  Outcome outcome = Outcome::aborted;
  AbortReason reason = AbortReason::none;
  std::uint32_t rounds_used = 0;
  std::string detail;

  bool chordal() const { return outcome == Outcome::chordal; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string_view outcome_name(Outcome o);
std::string_view abort_reason_name(AbortReason r);
// "CHORDAL (3 rounds)", "NOT_CHORDAL (1 round)", "ABORTED: budget exceeded at round 1".
std::string summary(const Verdict& v);

struct RoundRecord {
  std::uint32_t round = 0;
  std::vector<std::int64_t> scores;
  std::vector<std::uint8_t> mask;
  std::size_t surviving = 0;
  std::size_t bytes_sent = 0;
  std::size_t bytes_received = 0;
  double millis = 0.0;
};

struct Transcript {
  std::vector<RoundRecord> rounds;
  std::optional<Verdict> verdict;

  // One JSON object per round, then a final verdict line. With
  // include_timing false the millis field is written as 0.
  std::string to_jsonl(bool include_timing = true) const;
};

struct ProtocolOptions {
  // Alice re-encrypts the original adjacency matrix every round so Bob's
  // matrix restarts at level 0 instead of growing by 2 per round.
  bool refresh = false;
};

struct InitPayload {
  he::PublicKey pk;
  std::size_t n = 0;
  CtMatrix adjacency;
  CtVector mask;
};

struct NextMask {
  std::uint32_t round = 0;
  CtVector mask;
  std::optional<CtMatrix> adjacency;  // set in refresh mode
};

struct AliceState {
  he::PublicKey pk;
  he::SecretKey sk;
  std::size_t n = 0;
  std::vector<std::uint8_t> mask;  // 1 = still present, 0 = removed
  std::size_t k_prev = 0;          // surviving count of the previous round
  std::uint32_t round = 0;         // round whose scores are awaited
  Transcript transcript;
  std::optional<Verdict> verdict;
  ProtocolOptions options;
  Graph graph;
  he::Rng rng;

  bool finished() const { return verdict.has_value(); }
};

struct BobState {
  he::PublicKey pk;
  CtMatrix adjacency;
  std::size_t n = 0;
  std::uint32_t round = 0;

  BobState() = default;
  BobState(const he::PublicKey& key, CtMatrix a);
};

// Keys, the encrypted adjacency matrix and the first (all-ones) mask. For
// n = 0 the state is already finished with CHORDAL after zero rounds.
std::pair<AliceState, InitPayload> alice_init(const Graph& g, const he::HeParams& params,
                                              ProtocolOptions options = {});

BobState bob_init(const InitPayload& init);

// Masks Bob's matrix with the encrypted survival vector and returns the
// encrypted simplicial scores.
CtVector bob_round(BobState& bob, const CtVector& mask);

// Replaces Bob's matrix with a freshly encrypted one (refresh mode).
void bob_refresh(BobState& bob, CtMatrix fresh);

// Decrypts and normalizes the scores. Returns the next encrypted mask, or
// the verdict once all vertices are removed or no vertex was removed.
std::variant<NextMask, Verdict> alice_step(AliceState& alice, const CtVector& scores);

struct RunResult {
  Verdict verdict;
  Transcript transcript;
};

RunResult run_local(const Graph& g, const he::HeParams& params, ProtocolOptions options = {});

}  // namespace hechordal
