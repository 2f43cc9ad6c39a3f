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
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hechordal {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph stored as a dense symmetric 0/1 adjacency matrix.
// Vertex ids are 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t size() const { return n_; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
  std::uint8_t entry(Vertex u, Vertex v) const { return adj_[u * n_ + v]; }

  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::size_t edge_count() const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // Graph induced on the vertices whose keep flag is set, with the dropped
  // vertices left in place as isolated vertices.
  Graph with_isolated(const std::vector<bool>& keep) const;

  // Relabel: vertex v of this graph becomes perm[v].
  Graph permuted(const std::vector<Vertex>& perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;
  void set_edge(Vertex u, Vertex v);

  std::size_t n_ = 0;
  std::vector<std::uint8_t> adj_;
};

inline Graph graph_from_edges(std::size_t n, const std::vector<Edge>& edges) {
  return Graph::from_edges(n, edges);
}

std::size_t degree(const Graph& g, Vertex v);
std::vector<Vertex> neighbors(const Graph& g, Vertex v);

// Text edge-list format: first line n, then one "u v" line per edge, u < v.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

// ---- plaintext chordality oracles ----

struct EliminationResult {
  bool is_chordal = false;
  std::vector<Vertex> order;
};

bool is_simplicial(const Graph& g, Vertex v);

// Removes every simplicial vertex per pass until the graph is empty or no
// simplicial vertex remains. Batch members are recorded in ascending id.
EliminationResult eliminate(const Graph& g);

// Same recognition, one simplicial vertex (the smallest id) per step.
EliminationResult eliminate_one_at_a_time(const Graph& g);

inline constexpr std::size_t kExhaustiveLimit = 12;

// Exhaustive search for an induced cycle of length >= 4. Throws GraphError
// when n > kExhaustiveLimit.
bool chord_free_cycle_exists(const Graph& g);

// Maximum cardinality search, reversed, then checked as a perfect
// elimination ordering.
EliminationResult mcs_peo(const Graph& g);

// True when each vertex of order is simplicial in the graph induced by itself
// and the vertices after it, and order covers all of g.
bool is_perfect_elimination_ordering(const Graph& g, const std::vector<Vertex>& order);

// ---- generators ----

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);
Graph gen_chordal(std::size_t n, std::uint64_t seed);
Graph path_graph(std::size_t k);
Graph cycle_graph(std::size_t k);
Graph complete_graph(std::size_t k);

// fig1a, fig1b, fig3, path-k, cycle-k, complete-k.
Graph builtin_graph(std::string_view name);
bool is_builtin_name(std::string_view name);

// Builtin name or path to a graph file.
Graph load_graph(const std::string& name_or_path);

}  // namespace hechordal
