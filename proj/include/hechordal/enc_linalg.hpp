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
#include <vector>

#include "hechordal/graph.hpp"
#include "hechordal/he.hpp"

namespace hechordal {

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense square matrix of ciphertexts, row-major.
class CtMatrix {
 public:
  CtMatrix() = default;
  explicit CtMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  CtMatrix(std::size_t n, std::vector<he::Ciphertext> entries);

  std::size_t size() const { return n_; }
  he::Ciphertext& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const he::Ciphertext& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<he::Ciphertext>& entries() const { return entries_; }

  // Largest entry level; 0 for an empty matrix.
  std::uint32_t level() const;

  friend bool operator==(const CtMatrix&, const CtMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<he::Ciphertext> entries_;
};

using CtVector = std::vector<he::Ciphertext>;

using PlainMatrix = std::vector<std::vector<std::int64_t>>;

CtMatrix encrypt_adjacency(const he::PublicKey& pk, const Graph& g, he::Rng& rng);
CtMatrix encrypt_matrix(const he::PublicKey& pk, const PlainMatrix& m, he::Rng& rng);
CtVector encrypt_vector(const he::PublicKey& pk, const std::vector<std::int64_t>& v, he::Rng& rng);

PlainMatrix decrypt_matrix(const he::SecretKey& sk, const CtMatrix& m);
std::vector<std::int64_t> decrypt_vector(const he::SecretKey& sk, const CtVector& v);

// Kernels below parallelize over rows with OpenMP. Each output entry depends
// only on the inputs, so results equal the serial:: versions bit for bit.

// Textbook product: out[i][j] = sum_k X[i][k] * Y[k][j].
CtMatrix mat_mul(const he::Evaluator& ev, const CtMatrix& x, const CtMatrix& y);

// Entrywise product.
CtMatrix hadamard(const he::Evaluator& ev, const CtMatrix& x, const CtMatrix& y);

// score[i] = sum_j M[i][j] - d_i * (d_i - 1), d_i = sum_j A[i][j], with
// M = (A*A) . A. Zero exactly when the neighbourhood of i is a clique.
CtVector simplicial_scores(const he::Evaluator& ev, const CtMatrix& a);

// out[i][j] = (A[i][j] * s[i]) * s[j]; level rises by 2.
CtMatrix apply_mask(const he::Evaluator& ev, const CtMatrix& a, const CtVector& s);

namespace serial {

CtMatrix mat_mul(const he::Evaluator& ev, const CtMatrix& x, const CtMatrix& y);
CtMatrix hadamard(const he::Evaluator& ev, const CtMatrix& x, const CtMatrix& y);
CtVector simplicial_scores(const he::Evaluator& ev, const CtMatrix& a);
CtMatrix apply_mask(const he::Evaluator& ev, const CtMatrix& a, const CtVector& s);

}  // namespace serial

namespace detail {

void check_same_size(const CtMatrix& x, const CtMatrix& y, const char* op);
void check_vector_size(const CtMatrix& a, const CtVector& s, const char* op);

}  // namespace detail

}  // namespace hechordal
