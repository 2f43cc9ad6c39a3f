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

#include "json.hpp"

#include "gtest/gtest.h"
#include "hechordal/protocol.hpp"
#include "test_support.hpp"

namespace hechordal {
namespace {

using namespace hechordal::testing;

he::HeParams params_for(const Graph& g, he::Backend backend = he::Backend::masked_residue,
                        std::optional<std::uint32_t> budget = std::nullopt, std::uint64_t seed = 1) {
  return he::HeParams::for_vertices(g.size(), backend, budget, seed);
}

// Drives the protocol by hand, recording each round's raw score ciphertexts.
struct Driven {
  Verdict verdict;
  std::vector<CtVector> scores;
  std::vector<CtVector> masks;
  AliceState alice;
};

Driven drive(const Graph& g, const he::HeParams& params, ProtocolOptions options = {}) {
  auto [alice, init] = alice_init(g, params, options);
  Driven d;
  if (alice.finished()) {
    d.verdict = *alice.verdict;
    d.alice = std::move(alice);
    return d;
  }
  BobState bob = bob_init(init);
  CtVector mask = init.mask;
  while (true) {
    d.masks.push_back(mask);
    d.scores.push_back(bob_round(bob, mask));
    auto step = alice_step(alice, d.scores.back());
    if (auto* v = std::get_if<Verdict>(&step)) {
      d.verdict = *v;
      break;
    }
    auto& next = std::get<NextMask>(step);
    EXPECT_EQ(next.round, alice.round);
    EXPECT_EQ(next.adjacency.has_value(), options.refresh);
    if (next.adjacency) bob_refresh(bob, *next.adjacency);
    mask = next.mask;
  }
  d.alice = std::move(alice);
  return d;
}

TEST(Protocol, Fig3ReferenceRun) {
  const Graph g = builtin_graph("fig3");
  const auto [verdict, transcript] = run_local(g, params_for(g));
  EXPECT_EQ(verdict.outcome, Outcome::chordal);
  EXPECT_EQ(verdict.rounds_used, 3u);
  EXPECT_EQ(summary(verdict), "CHORDAL (3 rounds)");
  ASSERT_EQ(transcript.rounds.size(), 3u);
  EXPECT_EQ(in_label_order(transcript.rounds[0].scores, kFig3Labels), kFig3Scores);
  EXPECT_EQ(transcript.rounds[0].mask, (std::vector<std::uint8_t>{1, 1, 1, 0, 0, 1, 0}));
  const auto& r2 = transcript.rounds[1].scores;
  for (Vertex v : {0u, 1u, 5u, 3u, 4u, 6u}) EXPECT_EQ(r2[v], 0) << v;
  EXPECT_NE(r2[2], 0);
  EXPECT_EQ(transcript.rounds[0].surviving, 4u);
  EXPECT_EQ(transcript.rounds[1].surviving, 1u);
  EXPECT_EQ(transcript.rounds[2].surviving, 0u);
}

TEST(Protocol, CycleIsRejectedInOneRound) {
  const Graph g = cycle_graph(4);
  const auto r = run_local(g, params_for(g));
  EXPECT_EQ(r.verdict.outcome, Outcome::not_chordal);
  EXPECT_EQ(r.verdict.rounds_used, 1u);
  EXPECT_EQ(summary(r.verdict), "NOT_CHORDAL (1 round)");
}

TEST(Protocol, Fig1Examples) {
  const Graph a = builtin_graph("fig1a");
  EXPECT_EQ(run_local(a, params_for(a)).verdict.outcome, Outcome::chordal);
  const Graph b = builtin_graph("fig1b");
  const auto r = run_local(b, params_for(b));
  EXPECT_EQ(r.verdict.outcome, Outcome::not_chordal);
  EXPECT_EQ(r.verdict.rounds_used, 2u);
}

TEST(Protocol, EmptyAndTrivialGraphs) {
  const auto empty = run_local(Graph(0), he::HeParams::for_vertices(0));
  EXPECT_EQ(empty.verdict.outcome, Outcome::chordal);
  EXPECT_EQ(empty.verdict.rounds_used, 0u);
  EXPECT_TRUE(empty.transcript.rounds.empty());
  const auto single = run_local(Graph(1), he::HeParams::for_vertices(1));
  EXPECT_EQ(single.verdict.outcome, Outcome::chordal);
  EXPECT_EQ(single.verdict.rounds_used, 1u);
  const auto isolated = run_local(Graph(5), he::HeParams::for_vertices(5));
  EXPECT_EQ(isolated.verdict.rounds_used, 1u);
  EXPECT_TRUE(isolated.verdict.chordal());
}

TEST(Protocol, RejectsUndersizedParams) {
  auto p = he::HeParams::for_vertices(3);
  EXPECT_THROW(alice_init(path_graph(20), p), he::ParamsError);
}

// Both backends agree with batch elimination on every graph of up to six
// vertices; round count equals the number of elimination passes.
TEST(Protocol, ExhaustiveAgreementWithElimination) {
  for (he::Backend backend : {he::Backend::masked_residue, he::Backend::passthrough}) {
    for (std::size_t n = 0; n <= 6; ++n) {
      const auto pairs = static_cast<std::uint32_t>(n > 0 ? n * (n - 1) / 2 : 0);
      for (std::uint32_t code = 0; code < (1u << pairs); ++code) {
        const Graph g = graph_from_code(n, code);
        const auto r = run_local(g, params_for(g, backend, std::nullopt, code));
        ASSERT_EQ(r.verdict.chordal(), eliminate(g).is_chordal) << "n=" << n << " code=" << code;
        ASSERT_NE(r.verdict.outcome, Outcome::aborted);
        ASSERT_LE(r.verdict.rounds_used, std::max<std::size_t>(n, 0));
      }
    }
  }
}

TEST(Protocol, SurvivorsStrictlyDecreaseAndMaskIsBinary) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = seed % 2 ? gen_chordal(15, seed) : gen_gnp(15, 0.25, seed);
    const auto r = run_local(g, params_for(g, he::Backend::masked_residue, std::nullopt, seed));
    std::size_t prev = g.size();
    for (std::size_t i = 0; i < r.transcript.rounds.size(); ++i) {
      const auto& rec = r.transcript.rounds[i];
      EXPECT_EQ(rec.round, i + 1);
      for (std::size_t v = 0; v < g.size(); ++v) {
        EXPECT_LE(rec.mask[v], 1);
        EXPECT_EQ(rec.mask[v], rec.scores[v] != 0 ? 1 : 0);
        if (i > 0 && r.transcript.rounds[i - 1].mask[v] == 0) EXPECT_EQ(rec.mask[v], 0);
      }
      if (i + 1 < r.transcript.rounds.size()) EXPECT_LT(rec.surviving, prev);
      prev = rec.surviving;
    }
    EXPECT_LE(r.verdict.rounds_used, g.size());
  }
}

TEST(Protocol, MaskIsFreshlyEncryptedEveryRound) {
  const Graph g = path_graph(8);
  const auto d = drive(g, params_for(g));
  ASSERT_GE(d.masks.size(), 3u);
  for (std::size_t r = 1; r < d.masks.size(); ++r) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      EXPECT_NE(he::payload_value(d.alice.pk, d.masks[r][v]),
                he::payload_value(d.alice.pk, d.masks[r - 1][v]))
          << "round " << r << " vertex " << v;
      EXPECT_EQ(d.masks[r][v].level, 0u);
    }
  }
}

// Levels replayed independently: each round squares the mask into the
// adjacency (+2), and the score adds two more multiplications.
TEST(Protocol, ScoreDepthGrowsTwoPerRound) {
  const Graph g = path_graph(8);
  const auto d = drive(g, params_for(g));
  ASSERT_EQ(d.scores.size(), 4u);
  for (std::size_t r = 0; r < d.scores.size(); ++r) {
    for (const auto& c : d.scores[r]) EXPECT_EQ(c.level, 2 * (r + 1) + 2);
  }
  const auto refreshed = drive(g, params_for(g), ProtocolOptions{true});
  ASSERT_EQ(refreshed.scores.size(), 4u);
  for (const auto& round : refreshed.scores) {
    for (const auto& c : round) EXPECT_EQ(c.level, 4u);
  }
  EXPECT_TRUE(refreshed.verdict.chordal());
}

TEST(Protocol, BudgetAbortsAtExpectedRound) {
  const Graph g = path_graph(8);
  const auto tight = run_local(g, params_for(g, he::Backend::masked_residue, 9));
  EXPECT_EQ(tight.verdict.outcome, Outcome::aborted);
  EXPECT_EQ(tight.verdict.reason, AbortReason::budget);
  EXPECT_EQ(tight.verdict.rounds_used, 4u);
  EXPECT_EQ(summary(tight.verdict), "ABORTED: budget exceeded at round 4");
  EXPECT_EQ(tight.transcript.rounds.size(), 3u);

  const auto enough = run_local(g, params_for(g, he::Backend::masked_residue, 10));
  EXPECT_TRUE(enough.verdict.chordal());
  EXPECT_EQ(enough.verdict.rounds_used, 4u);

  const auto refresh = run_local(g, params_for(g, he::Backend::masked_residue, 4), {true});
  EXPECT_TRUE(refresh.verdict.chordal());

  const Graph fig3 = builtin_graph("fig3");
  const auto first = run_local(fig3, params_for(fig3, he::Backend::masked_residue, 3));
  EXPECT_EQ(summary(first.verdict), "ABORTED: budget exceeded at round 1");
}

TEST(Protocol, BackendsProduceSameTranscriptPlaintexts) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_gnp(12, 0.35, seed);
    const auto a = run_local(g, params_for(g, he::Backend::masked_residue, std::nullopt, seed));
    const auto b = run_local(g, params_for(g, he::Backend::passthrough, std::nullopt, seed));
    EXPECT_EQ(a.verdict, b.verdict);
    ASSERT_EQ(a.transcript.rounds.size(), b.transcript.rounds.size());
    for (std::size_t i = 0; i < a.transcript.rounds.size(); ++i) {
      EXPECT_EQ(a.transcript.rounds[i].scores, b.transcript.rounds[i].scores);
    }
  }
}

TEST(Protocol, StepAfterVerdictIsStable) {
  const Graph g = cycle_graph(5);
  auto d = drive(g, params_for(g));
  ASSERT_EQ(d.verdict.outcome, Outcome::not_chordal);
  auto again = alice_step(d.alice, d.scores.back());
  ASSERT_TRUE(std::holds_alternative<Verdict>(again));
  EXPECT_EQ(std::get<Verdict>(again), d.verdict);
}

TEST(Transcript, JsonLinesFormat) {
  const Graph g = builtin_graph("fig3");
  const auto r = run_local(g, params_for(g));
  const std::string text = r.transcript.to_jsonl(false);
  std::vector<nlohmann::json> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    ASSERT_NE(nl, std::string::npos);
    lines.push_back(nlohmann::json::parse(text.substr(pos, nl - pos)));
    pos = nl + 1;
  }
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0]["round"], 1);
  EXPECT_EQ(lines[0]["surviving"], 4);
  EXPECT_EQ(lines[0]["millis"], 0.0);
  EXPECT_GT(lines[0]["bytes_sent"].get<std::size_t>(), lines[1]["bytes_sent"].get<std::size_t>());
  EXPECT_GT(lines[0]["bytes_received"].get<std::size_t>(), 0u);
  EXPECT_EQ(lines[3]["verdict"], "CHORDAL");
  EXPECT_EQ(lines[3]["rounds_used"], 3);
  EXPECT_FALSE(lines[3].contains("reason"));
  EXPECT_EQ(text, run_local(g, params_for(g)).transcript.to_jsonl(false));
}

TEST(Transcript, AbortLineCarriesReason) {
  const Graph g = builtin_graph("fig3");
  const auto r = run_local(g, params_for(g, he::Backend::masked_residue, 3));
  const std::string text = r.transcript.to_jsonl();
  const auto last = nlohmann::json::parse(text.substr(0, text.size() - 1));
  EXPECT_EQ(last["verdict"], "ABORTED");
  EXPECT_EQ(last["reason"], "budget");
  EXPECT_EQ(last["rounds_used"], 1);
}

}  // namespace
}  // namespace hechordal
