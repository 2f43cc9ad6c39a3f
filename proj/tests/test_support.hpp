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

// Fixtures shared by the unit and acceptance suites: reference matrices for
// the two example graphs and small plaintext reference helpers
// that do not go through the encrypted kernels.

#include <cstdint>
#include <vector>

#include "hechordal/enc_linalg.hpp"
#include "hechordal/graph.hpp"

namespace hechordal::testing {

// fig3 reference matrices, rows/columns labelled (v1, v2, v4, v3, v5, v6, v7).
inline const PlainMatrix kFig3A = {
    {0, 1, 1, 1, 0, 0, 0}, {1, 0, 1, 1, 1, 0, 0}, {1, 1, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 1, 1, 0},
    {0, 1, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 1}, {0, 0, 0, 0, 0, 1, 0}};
inline const PlainMatrix kFig3A2 = {
    {3, 2, 1, 1, 2, 1, 0}, {2, 4, 1, 2, 1, 1, 0}, {1, 1, 2, 2, 1, 0, 0}, {1, 2, 2, 4, 1, 0, 1},
    {2, 1, 1, 1, 2, 1, 0}, {1, 1, 0, 0, 1, 2, 0}, {0, 0, 0, 1, 0, 0, 1}};
inline const PlainMatrix kFig3M = {
    {0, 2, 1, 1, 0, 0, 0}, {2, 0, 1, 2, 1, 0, 0}, {1, 1, 0, 0, 0, 0, 0}, {1, 2, 0, 0, 1, 0, 0},
    {0, 1, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0}};
inline const std::vector<std::int64_t> kFig3Scores = {-2, -6, 0, -8, 0, -2, 0};
// Display position p shows vertex kFig3Labels[p] (vertex id k-1 for v_k).
inline const std::vector<Vertex> kFig3Labels = {0, 1, 3, 2, 4, 5, 6};

// fig1a reference matrices, labels v1..v5 in order.
inline const PlainMatrix kFig1aA = {
    {0, 1, 1, 0, 0}, {1, 0, 1, 1, 0}, {1, 1, 0, 1, 1}, {0, 1, 1, 0, 1}, {0, 0, 1, 1, 0}};
inline const PlainMatrix kFig1aA2 = {
    {2, 1, 1, 2, 1}, {1, 3, 2, 1, 2}, {1, 2, 4, 2, 1}, {2, 1, 2, 3, 1}, {1, 2, 1, 1, 2}};
inline const PlainMatrix kFig1aM = {
    {0, 1, 1, 0, 0}, {1, 0, 2, 1, 0}, {1, 2, 0, 2, 1}, {0, 1, 2, 0, 1}, {0, 0, 1, 1, 0}};

// Reorders rows and columns so position p holds vertex labels[p].
inline PlainMatrix in_label_order(const PlainMatrix& m, const std::vector<Vertex>& labels) {
  PlainMatrix out(labels.size(), std::vector<std::int64_t>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = 0; j < labels.size(); ++j) out[i][j] = m[labels[i]][labels[j]];
  }
  return out;
}

template <typename T>
std::vector<T> in_label_order(const std::vector<T>& v, const std::vector<Vertex>& labels) {
  std::vector<T> out;
  for (Vertex l : labels) out.push_back(v[l]);
  return out;
}

// Graph on n <= 6 vertices whose edges are the set bits of code, pairs
// enumerated (0,1), (0,2), ..., (n-2,n-1).
inline Graph graph_from_code(std::size_t n, std::uint32_t code) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1u) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

// Plaintext score by direct neighbourhood counting: for each neighbour j,
// the number of common neighbours of i and j, summed, minus d(d-1).
inline std::int64_t reference_score(const Graph& g, Vertex i) {
  const auto nbrs = g.neighbors(i);
  std::int64_t common = 0;
  for (Vertex j : nbrs) {
    for (Vertex k : nbrs) {
      if (k != j && g.adjacent(j, k)) ++common;
    }
  }
  const auto d = static_cast<std::int64_t>(nbrs.size());
  return common - d * (d - 1);
}

}  // namespace hechordal::testing
