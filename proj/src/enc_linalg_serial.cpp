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

// Single-threaded reference kernels. Kept for tests and the benchmark; the
// production path lives in enc_linalg.cpp.

#include <vector>

#include "hechordal/enc_linalg.hpp"

namespace hechordal::serial {

CtMatrix mat_mul(const he::Evaluator& ev, const CtMatrix& x, const CtMatrix& y) {
  detail::check_same_size(x, y, "mat_mul");
  const std::size_t n = x.size();
  CtMatrix out(n);
  // i-k-j order: accumulate row k of y scaled by x[i][k].
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        const he::Ciphertext term = ev.mul(x.at(i, k), y.at(k, j));
        out.at(i, j) = k == 0 ? term : ev.add(out.at(i, j), term);
      }
    }
  }
  return out;
}

CtMatrix hadamard(const he::Evaluator& ev, const CtMatrix& x, const CtMatrix& y) {
  detail::check_same_size(x, y, "hadamard");
  const std::size_t n = x.size();
  CtMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = ev.mul(x.at(i, j), y.at(i, j));
  }
  return out;
}

CtVector simplicial_scores(const he::Evaluator& ev, const CtMatrix& a) {
  const std::size_t n = a.size();
  const CtMatrix m = serial::hadamard(ev, serial::mat_mul(ev, a, a), a);
  CtVector scores;
  scores.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    he::Ciphertext path_sum = m.at(i, 0);
    for (std::size_t j = 1; j < n; ++j) path_sum = ev.add(path_sum, m.at(i, j));
    he::Ciphertext deg = a.at(i, 0);
    for (std::size_t j = 1; j < n; ++j) deg = ev.add(deg, a.at(i, j));
    const he::Ciphertext deg_minus_one = ev.sub_plain(deg, 1);
    scores.push_back(ev.sub(path_sum, ev.mul(deg, deg_minus_one)));
  }
  return scores;
}

CtMatrix apply_mask(const he::Evaluator& ev, const CtMatrix& a, const CtVector& s) {
  detail::check_vector_size(a, s, "apply_mask");
  const std::size_t n = a.size();
  CtMatrix rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows.at(i, j) = ev.mul(a.at(i, j), s[i]);
  }
  CtMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = ev.mul(rows.at(i, j), s[j]);
  }
  return out;
}

}  // namespace hechordal::serial
