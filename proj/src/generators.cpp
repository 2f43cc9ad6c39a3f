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

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "hechordal/graph.hpp"

namespace hechordal {
namespace {

// 53-bit uniform double in [0, 1); independent of the standard library's
// distribution implementations so generated graphs are stable across platforms.
double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

bool parse_suffix(std::string_view name, std::string_view prefix, std::size_t& k) {
  if (name.substr(0, prefix.size()) != prefix) return false;
  const auto digits = name.substr(prefix.size());
  if (digits.empty()) return false;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  return ec == std::errc() && ptr == digits.data() + digits.size();
}

}  // namespace

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (unit_real(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_chordal(std::size_t n, std::uint64_t seed) {
  // Each new vertex attaches to a clique of earlier vertices, so reversed
  // insertion order is a perfect elimination ordering.
  std::mt19937_64 rng(seed);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const Vertex anchor = below(rng, v);
    std::vector<Vertex> candidates;
    for (Vertex u = 0; u < v; ++u) {
      if (adj[anchor][u]) candidates.push_back(u);
    }
    for (std::size_t i = candidates.size(); i > 1; --i) {
      std::swap(candidates[i - 1], candidates[below(rng, i)]);
    }
    const std::size_t want = candidates.empty() ? 0 : below(rng, candidates.size() + 1);
    std::vector<Vertex> clique{anchor};
    for (Vertex c : candidates) {
      if (clique.size() > want) break;
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex w) { return adj[c][w]; })) {
        clique.push_back(c);
      }
    }
    for (Vertex w : clique) {
      adj[v][w] = adj[w][v] = true;
      edges.emplace_back(w, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(k, edges);
}

Graph cycle_graph(std::size_t k) {
  if (k < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < k; ++v) edges.emplace_back(v, (v + 1) % k);
  return Graph::from_edges(k, edges);
}

Graph complete_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(k, edges);
}

Graph builtin_graph(std::string_view name) {
  // Builtin fig* graphs use vertex id k-1 for label v_k.
  if (name == "fig1a") {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  }
  if (name == "fig1b") {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  }
  if (name == "fig3") {
    return Graph::from_edges(
        7, {{3, 0}, {3, 1}, {1, 0}, {1, 4}, {0, 2}, {1, 2}, {4, 2}, {2, 5}, {5, 6}});
  }
  std::size_t k = 0;
  if (parse_suffix(name, "path-", k)) return path_graph(k);
  if (parse_suffix(name, "cycle-", k)) return cycle_graph(k);
  if (parse_suffix(name, "complete-", k)) return complete_graph(k);
  throw GraphError("unknown builtin graph '" + std::string(name) + "'");
}

bool is_builtin_name(std::string_view name) {
  std::size_t k = 0;
  return name == "fig1a" || name == "fig1b" || name == "fig3" || parse_suffix(name, "path-", k) ||
         parse_suffix(name, "cycle-", k) || parse_suffix(name, "complete-", k);
}

Graph load_graph(const std::string& name_or_path) {
  if (is_builtin_name(name_or_path) && !std::filesystem::exists(name_or_path)) {
    return builtin_graph(name_or_path);
  }
  return read_graph_file(name_or_path);
}

}  // namespace hechordal
