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

#include "hechordal/protocol.hpp"

#include <chrono>
#include <numeric>
#include <tuple>
#include <string>

#include "hechordal/wire.hpp"

namespace hechordal {
namespace {

Verdict make_verdict(Outcome outcome, std::uint32_t rounds, AbortReason reason = AbortReason::none,
                     std::string detail = {}) {
  Verdict v;
  v.outcome = outcome;
  v.reason = reason;
  v.rounds_used = rounds;
  v.detail = std::move(detail);
  return v;
}

CtVector encrypt_mask(AliceState& alice) {
  const he::Encryptor enc(alice.pk);
  CtVector out;
  out.reserve(alice.n);
  for (std::uint8_t bit : alice.mask) out.push_back(enc.encrypt(bit, alice.rng));
  return out;
}

}  // namespace

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::chordal:
      return "CHORDAL";
    case Outcome::not_chordal:
      return "NOT_CHORDAL";
    case Outcome::aborted:
      return "ABORTED";
  }
  return "UNKNOWN";
}

std::string_view abort_reason_name(AbortReason r) {
  switch (r) {
    case AbortReason::none:
      return "none";
    case AbortReason::budget:
      return "budget";
    case AbortReason::transport:
      return "transport";
    case AbortReason::negotiation:
      return "negotiation";
  }
  return "unknown";
}

std::string summary(const Verdict& v) {
  if (v.outcome == Outcome::aborted) {
    std::string s = "ABORTED: ";
    s += v.detail.empty() ? std::string(abort_reason_name(v.reason)) : v.detail;
    return s;
  }
  return std::string(outcome_name(v.outcome)) + " (" + std::to_string(v.rounds_used) +
         (v.rounds_used == 1 ? " round)" : " rounds)");
}

BobState::BobState(const he::PublicKey& key, CtMatrix a)
    : pk(key), adjacency(std::move(a)), n(adjacency.size()) {}

std::pair<AliceState, InitPayload> alice_init(const Graph& g, const he::HeParams& params,
                                              ProtocolOptions options) {
  params.validate();
  const std::size_t n = g.size();
  if (!params.supports_vertices(n)) {
    throw he::ParamsError("plaintext modulus " + std::to_string(params.t) + " is too small for n=" +
                          std::to_string(n));
  }
  AliceState alice;
  std::tie(alice.pk, alice.sk) = he::keygen(params);
  alice.n = n;
  alice.mask.assign(n, 1);
  alice.k_prev = n + 1;
  alice.options = options;
  alice.graph = g;
  alice.rng.seed(params.seed);

  InitPayload init;
  init.pk = alice.pk;
  init.n = n;
  init.adjacency = encrypt_adjacency(alice.pk, g, alice.rng);

  // First pass of the loop guard: an empty mask is already the zero vector.
  if (n == 0) {
    alice.verdict = make_verdict(Outcome::chordal, 0);
    alice.transcript.verdict = alice.verdict;
    return {std::move(alice), std::move(init)};
  }
  alice.k_prev = n;
  alice.round = 1;
  init.mask = encrypt_mask(alice);
  return {std::move(alice), std::move(init)};
}

BobState bob_init(const InitPayload& init) { return BobState(init.pk, init.adjacency); }

CtVector bob_round(BobState& bob, const CtVector& mask) {
  const he::Evaluator ev(bob.pk);
  bob.adjacency = apply_mask(ev, bob.adjacency, mask);
  ++bob.round;
  return simplicial_scores(ev, bob.adjacency);
}

void bob_refresh(BobState& bob, CtMatrix fresh) {
  if (fresh.size() != bob.n) throw LinalgError("refreshed matrix has the wrong dimension");
  bob.adjacency = std::move(fresh);
}

std::variant<NextMask, Verdict> alice_step(AliceState& alice, const CtVector& scores) {
  if (alice.finished()) return *alice.verdict;
  if (scores.size() != alice.n) {
    throw LinalgError("score vector length " + std::to_string(scores.size()) +
                      " does not match n=" + std::to_string(alice.n));
  }
  const auto finish = [&alice](Verdict v) {
    alice.verdict = v;
    alice.transcript.verdict = v;
    return v;
  };

  RoundRecord record;
  record.round = alice.round;
  try {
    record.scores = decrypt_vector(alice.sk, scores);
  } catch (const he::BudgetExceeded&) {
    return finish(make_verdict(Outcome::aborted, alice.round, AbortReason::budget,
                               "budget exceeded at round " + std::to_string(alice.round)));
  }
  for (std::size_t i = 0; i < alice.n; ++i) alice.mask[i] = record.scores[i] != 0 ? 1 : 0;
  record.mask = alice.mask;
  record.surviving = std::accumulate(alice.mask.begin(), alice.mask.end(), std::size_t{0});
  alice.transcript.rounds.push_back(record);

  if (record.surviving == 0) return finish(make_verdict(Outcome::chordal, alice.round));
  if (record.surviving >= alice.k_prev) {
    return finish(make_verdict(Outcome::not_chordal, alice.round));
  }
  alice.k_prev = record.surviving;
  ++alice.round;

  NextMask next;
  next.round = alice.round;
  // Every entry is re-encrypted, zeros included, so Bob cannot tell which
  // positions changed.
  next.mask = encrypt_mask(alice);
  if (alice.options.refresh) next.adjacency = encrypt_adjacency(alice.pk, alice.graph, alice.rng);
  return next;
}

RunResult run_local(const Graph& g, const he::HeParams& params, ProtocolOptions options) {
  using Clock = std::chrono::steady_clock;
  auto [alice, init] = alice_init(g, params, options);
  if (alice.finished()) return {*alice.verdict, alice.transcript};

  BobState bob = bob_init(init);
  const std::size_t n = g.size();
  CtVector mask = std::move(init.mask);
  std::size_t sent = wire::init_frame_size(alice.pk, n);
  while (true) {
    const auto start = Clock::now();
    const CtVector scores = bob_round(bob, mask);
    auto step = alice_step(alice, scores);
    const double millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (!alice.transcript.rounds.empty() && alice.transcript.rounds.back().round == bob.round) {
      RoundRecord& rec = alice.transcript.rounds.back();
      rec.bytes_sent = sent;
      rec.bytes_received = wire::vector_frame_size(alice.pk, n);
      rec.millis = millis;
    }
    if (auto* verdict = std::get_if<Verdict>(&step)) return {*verdict, alice.transcript};
    auto& next = std::get<NextMask>(step);
    if (next.adjacency) {
      bob_refresh(bob, std::move(*next.adjacency));
      sent = wire::refresh_frame_size(alice.pk, n);
    } else {
      sent = wire::vector_frame_size(alice.pk, n);
    }
    mask = std::move(next.mask);
  }
}

}  // namespace hechordal
