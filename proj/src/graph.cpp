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

#include "hechordal/graph.hpp"

#include <string>

namespace hechordal {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (u == v) {
      throw GraphError("self-loop at vertex " + std::to_string(u));
    }
    g.set_edge(u, v);
  }
  return g;
}

void Graph::set_edge(Vertex u, Vertex v) {
  adj_[u * n_ + v] = 1;
  adj_[v * n_ + u] = 1;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  std::size_t d = 0;
  for (std::size_t u = 0; u < n_; ++u) d += adj_[v * n_ + u];
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (std::size_t u = 0; u < n_; ++u) {
    if (adj_[v * n_ + u]) out.push_back(u);
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t m = 0;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) m += adj_[u * n_ + v];
  }
  return m;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (adj_[u * n_ + v]) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_isolated(const std::vector<bool>& keep) const {
  if (keep.size() != n_) throw GraphError("keep mask length does not match vertex count");
  Graph g(n_);
  for (std::size_t u = 0; u < n_; ++u) {
    if (!keep[u]) continue;
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (keep[v] && adjacent(u, v)) g.set_edge(u, v);
    }
  }
  return g;
}

Graph Graph::permuted(const std::vector<Vertex>& perm) const {
  if (perm.size() != n_) throw GraphError("permutation length does not match vertex count");
  Graph g(n_);
  for (const auto& [u, v] : edges()) g.set_edge(perm[u], perm[v]);
  return g;
}

std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

std::vector<Vertex> neighbors(const Graph& g, Vertex v) { return g.neighbors(v); }

}  // namespace hechordal
