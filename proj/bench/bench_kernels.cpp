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

// Parallel kernels against the serial reference, per graph size.

#include <benchmark/benchmark.h>

#include "hechordal/enc_linalg.hpp"
#include "hechordal/graph.hpp"

namespace {

using namespace hechordal;

struct Fixture {
  he::PublicKey pk;
  he::SecretKey sk;
  CtMatrix a;
  CtVector ones;

  explicit Fixture(std::size_t n) {
    std::tie(pk, sk) = he::keygen(he::HeParams::for_vertices(n, he::Backend::masked_residue));
    he::Rng rng(n);
    a = encrypt_adjacency(pk, gen_gnp(n, 0.3, n), rng);
    ones = encrypt_vector(pk, std::vector<std::int64_t>(n, 1), rng);
  }
};

template <bool Parallel>
void BM_MatMul(benchmark::State& state) {
  const Fixture f(static_cast<std::size_t>(state.range(0)));
  const he::Evaluator ev(f.pk);
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(mat_mul(ev, f.a, f.a));
    } else {
      benchmark::DoNotOptimize(serial::mat_mul(ev, f.a, f.a));
    }
  }
  state.SetComplexityN(state.range(0));
}

template <bool Parallel>
void BM_Round(benchmark::State& state) {
  const Fixture f(static_cast<std::size_t>(state.range(0)));
  const he::Evaluator ev(f.pk);
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(simplicial_scores(ev, apply_mask(ev, f.a, f.ones)));
    } else {
      benchmark::DoNotOptimize(serial::simplicial_scores(ev, serial::apply_mask(ev, f.a, f.ones)));
    }
  }
  state.SetComplexityN(state.range(0));
}

BENCHMARK(BM_MatMul<false>)->Name("mat_mul/serial")->RangeMultiplier(2)->Range(16, 128)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_MatMul<true>)->Name("mat_mul/parallel")->RangeMultiplier(2)->Range(16, 128)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_Round<false>)->Name("round/serial")->RangeMultiplier(2)->Range(16, 128)->Complexity(benchmark::oNCubed);
BENCHMARK(BM_Round<true>)->Name("round/parallel")->RangeMultiplier(2)->Range(16, 128)->Complexity(benchmark::oNCubed);

}  // namespace

BENCHMARK_MAIN();
