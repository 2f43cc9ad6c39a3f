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
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hechordal/graph.hpp"

namespace hechordal {
namespace {

bool simplicial_among(const Graph& g, const std::vector<bool>& alive, Vertex v) {
  const std::size_t n = g.size();
  std::vector<Vertex> nbrs;
  for (Vertex u = 0; u < n; ++u) {
    if (alive[u] && g.adjacent(v, u)) nbrs.push_back(u);
  }
  for (std::size_t a = 0; a < nbrs.size(); ++a) {
    for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
      if (!g.adjacent(nbrs[a], nbrs[b])) return false;
    }
  }
  return true;
}

}  // namespace

bool is_simplicial(const Graph& g, Vertex v) {
  if (v >= g.size()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.size()));
  }
  return simplicial_among(g, std::vector<bool>(g.size(), true), v);
}

EliminationResult eliminate(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<bool> alive(n, true);
  std::size_t remaining = n;
  EliminationResult result;
  while (remaining > 0) {
    std::vector<Vertex> batch;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && simplicial_among(g, alive, v)) batch.push_back(v);
    }
    if (batch.empty()) break;
    for (Vertex v : batch) {
      alive[v] = false;
      result.order.push_back(v);
    }
    remaining -= batch.size();
  }
  result.is_chordal = remaining == 0;
  return result;
}

EliminationResult eliminate_one_at_a_time(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<bool> alive(n, true);
  EliminationResult result;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = n;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[v] && simplicial_among(g, alive, v)) {
        pick = v;
        break;
      }
    }
    if (pick == n) break;
    alive[pick] = false;
    result.order.push_back(pick);
  }
  result.is_chordal = result.order.size() == n;
  return result;
}

bool chord_free_cycle_exists(const Graph& g) {
  const std::size_t n = g.size();
  if (n > kExhaustiveLimit) {
    throw GraphError("exhaustive cycle search supports at most " + std::to_string(kExhaustiveLimit) +
                     " vertices, got " + std::to_string(n));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) adj[u] |= 1u << v;
    }
  }
  // An induced subgraph that is 2-regular and connected is a chordless cycle.
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t subset = 0; subset < limit; ++subset) {
    if (std::popcount(subset) < 4) continue;
    bool two_regular = true;
    for (Vertex v = 0; v < n && two_regular; ++v) {
      if ((subset >> v) & 1u) two_regular = std::popcount(adj[v] & subset) == 2;
    }
    if (!two_regular) continue;
    std::uint32_t seen = subset & (~subset + 1);
    std::uint32_t frontier = seen;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (Vertex v = 0; v < n; ++v) {
        if ((frontier >> v) & 1u) next |= adj[v] & subset;
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == subset) return true;
  }
  return false;
}

bool is_perfect_elimination_ordering(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.size();
  if (order.size() != n) return false;
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != n) return false;
    position[order[i]] = i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    std::vector<Vertex> later;
    for (Vertex u = 0; u < n; ++u) {
      if (g.adjacent(v, u) && position[u] > i) later.push_back(u);
    }
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        if (!g.adjacent(later[a], later[b])) return false;
      }
    }
  }
  return true;
}

EliminationResult mcs_peo(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<Vertex> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!visited[v] && (best == n || weight[v] > weight[best])) best = v;
    }
    visited[best] = true;
    visit.push_back(best);
    for (Vertex u = 0; u < n; ++u) {
      if (!visited[u] && g.adjacent(best, u)) ++weight[u];
    }
  }
  std::reverse(visit.begin(), visit.end());
  EliminationResult result;
  result.is_chordal = is_perfect_elimination_ordering(g, visit);
  result.order = std::move(visit);
  return result;
}

}  // namespace hechordal
