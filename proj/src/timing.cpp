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

#include "hechordal/timing.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

#include "hechordal/enc_linalg.hpp"
#include "hechordal/graph.hpp"

namespace hechordal {
namespace {

template <typename RoundFn>
double median_round(std::size_t n, he::Backend backend, int reps, std::uint64_t seed,
                    RoundFn&& round) {
  const Graph g = gen_gnp(n, 0.3, seed);
  const auto params = he::HeParams::for_vertices(n, backend, std::nullopt, seed);
  const auto [pk, sk] = he::keygen(params);
  he::Rng rng(seed);
  const he::Evaluator ev(pk);
  const CtMatrix a = encrypt_adjacency(pk, g, rng);
  const CtVector ones = encrypt_vector(pk, std::vector<std::int64_t>(n, 1), rng);

  round(ev, a, ones);
  std::vector<double> samples;
  for (int r = 0; r < std::max(reps, 1); ++r) {
    const auto start = std::chrono::steady_clock::now();
    round(ev, a, ones);
    samples.push_back(
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

}  // namespace

double time_bob_round(std::size_t n, he::Backend backend, int reps, std::uint64_t seed) {
  return median_round(n, backend, reps, seed,
                      [](const he::Evaluator& ev, const CtMatrix& a, const CtVector& s) {
                        return simplicial_scores(ev, apply_mask(ev, a, s));
                      });
}

double time_bob_round_serial(std::size_t n, he::Backend backend, int reps, std::uint64_t seed) {
  return median_round(n, backend, reps, seed,
                      [](const he::Evaluator& ev, const CtMatrix& a, const CtVector& s) {
                        return serial::simplicial_scores(ev, serial::apply_mask(ev, a, s));
                      });
}

}  // namespace hechordal
