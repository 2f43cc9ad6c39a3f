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

#include <cstddef>
#include <cstdint>

#include "hechordal/he.hpp"

namespace hechordal {

// Median wall time in milliseconds of one Bob round (mask + scores) on a
// G(n, 0.3) graph, over reps repetitions after one warm-up round.
double time_bob_round(std::size_t n, he::Backend backend, int reps, std::uint64_t seed);

// Same measurement through the single-threaded reference kernels.
double time_bob_round_serial(std::size_t n, he::Backend backend, int reps, std::uint64_t seed);

}  // namespace hechordal
