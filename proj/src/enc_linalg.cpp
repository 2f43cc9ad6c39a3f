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

#include "hechordal/enc_linalg.hpp"

#include <algorithm>
#include <exception>
#include <string>

namespace hechordal {
namespace {

// Runs body(i) for every row under OpenMP and rethrows the first exception.
template <typename Body>
void parallel_rows(std::size_t n, Body&& body) {
  std::exception_ptr error;
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(hechordal_linalg_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

CtMatrix::CtMatrix(std::size_t n, std::vector<he::Ciphertext> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) {
    throw LinalgError("matrix of dimension " + std::to_string(n) + " needs " +
                      std::to_string(n * n) + " entries, got " + std::to_string(entries_.size()));
  }
}

std::uint32_t CtMatrix::level() const {
  std::uint32_t lvl = 0;
  for (const auto& c : entries_) lvl = std::max(lvl, c.level);
  return lvl;
}

namespace detail {

void check_same_size(const CtMatrix& x, const CtMatrix& y, const char* op) {
  if (x.size() != y.size()) {
    throw LinalgError(std::string(op) + ": dimension mismatch " + std::to_string(x.size()) +
                      " vs " + std::to_string(y.size()));
  }
}

void check_vector_size(const CtMatrix& a, const CtVector& s, const char* op) {
  if (a.size() != s.size()) {
    throw LinalgError(std::string(op) + ": vector length " + std::to_string(s.size()) +
                      " does not match matrix dimension " + std::to_string(a.size()));
  }
}

}  // namespace detail

CtMatrix encrypt_adjacency(const he::PublicKey& pk, const Graph& g, he::Rng& rng) {
  const std::size_t n = g.size();
  if (pk.t < he::min_plaintext_modulus(n)) {
    throw he::ParamsError("plaintext modulus " + std::to_string(pk.t) + " is too small for n=" +
                          std::to_string(n) + " (needs at least " +
                          std::to_string(he::min_plaintext_modulus(n)) + ")");
  }
  const he::Encryptor enc(pk);
  CtMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = enc.encrypt(g.entry(i, j), rng);
  }
  return out;
}

CtMatrix encrypt_matrix(const he::PublicKey& pk, const PlainMatrix& m, he::Rng& rng) {
  const std::size_t n = m.size();
  const he::Encryptor enc(pk);
  CtMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw LinalgError("plaintext matrix is not square");
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = enc.encrypt(m[i][j], rng);
  }
  return out;
}

CtVector encrypt_vector(const he::PublicKey& pk, const std::vector<std::int64_t>& v,
                        he::Rng& rng) {
  const he::Encryptor enc(pk);
  CtVector out;
  out.reserve(v.size());
  for (std::int64_t x : v) out.push_back(enc.encrypt(x, rng));
  return out;
}

PlainMatrix decrypt_matrix(const he::SecretKey& sk, const CtMatrix& m) {
  const he::Decryptor dec(sk);
  PlainMatrix out(m.size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = dec.decrypt(m.at(i, j));
  }
  return out;
}

std::vector<std::int64_t> decrypt_vector(const he::SecretKey& sk, const CtVector& v) {
  const he::Decryptor dec(sk);
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(dec.decrypt(c));
  return out;
}

CtMatrix mat_mul(const he::Evaluator& ev, const CtMatrix& x, const CtMatrix& y) {
  detail::check_same_size(x, y, "mat_mul");
  const std::size_t n = x.size();
  CtMatrix out(n);
  parallel_rows(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      he::Ciphertext acc = ev.mul(x.at(i, 0), y.at(0, j));
      for (std::size_t k = 1; k < n; ++k) ev.add_inplace(acc, ev.mul(x.at(i, k), y.at(k, j)));
      out.at(i, j) = acc;
    }
  });
  return out;
}

CtMatrix hadamard(const he::Evaluator& ev, const CtMatrix& x, const CtMatrix& y) {
  detail::check_same_size(x, y, "hadamard");
  const std::size_t n = x.size();
  CtMatrix out(n);
  parallel_rows(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = ev.mul(x.at(i, j), y.at(i, j));
  });
  return out;
}

CtVector simplicial_scores(const he::Evaluator& ev, const CtMatrix& a) {
  const std::size_t n = a.size();
  const CtMatrix two_paths = hechordal::mat_mul(ev, a, a);
  const CtMatrix m = hechordal::hadamard(ev, two_paths, a);
  CtVector scores(n);
  parallel_rows(n, [&](std::size_t i) {
    he::Ciphertext path_sum = m.at(i, 0);
    he::Ciphertext deg = a.at(i, 0);
    for (std::size_t j = 1; j < n; ++j) {
      ev.add_inplace(path_sum, m.at(i, j));
      ev.add_inplace(deg, a.at(i, j));
    }
    scores[i] = ev.sub(path_sum, ev.mul(deg, ev.sub_plain(deg, 1)));
  });
  return scores;
}

CtMatrix apply_mask(const he::Evaluator& ev, const CtMatrix& a, const CtVector& s) {
  detail::check_vector_size(a, s, "apply_mask");
  const std::size_t n = a.size();
  CtMatrix out(n);
  parallel_rows(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = ev.mul(ev.mul(a.at(i, j), s[i]), s[j]);
  });
  return out;
}

}  // namespace hechordal
