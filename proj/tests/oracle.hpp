// Copyright 2026 The ftopo Authors
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

// Test-only brute-force oracles. They work on a raw vertex count plus edge
// list through a dense adjacency matrix and share no code with the library's
// index, transform or closed-form paths.

#ifndef FTOPO_TESTS_ORACLE_HPP
#define FTOPO_TESTS_ORACLE_HPP

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Pair = std::pair<std::uint32_t, std::uint32_t>;

struct Dense {
  std::size_t n = 0;
  std::vector<std::vector<bool>> adj;
  std::vector<std::int64_t> deg;

  Dense(std::size_t vertex_count, const std::vector<Pair>& edges)
      : n(vertex_count), adj(vertex_count, std::vector<bool>(vertex_count, false)), deg(vertex_count, 0) {
    for (auto [u, v] : edges) {
      adj[u][v] = adj[v][u] = true;
    }
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) deg[u] += adj[u][v] ? 1 : 0;
    }
  }

  std::int64_t edge_count() const {
    std::int64_t m = 0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) m += adj[u][v] ? 1 : 0;
    }
    return m;
  }

  std::int64_t m1() const {
    std::int64_t s = 0;
    for (auto d : deg) s += d * d;
    return s;
  }

  std::int64_t m2() const {
    std::int64_t s = 0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (adj[u][v]) s += deg[u] * deg[v];
      }
    }
    return s;
  }

  std::int64_t f() const {
    std::int64_t s = 0;
    for (auto d : deg) s += d * d * d;
    return s;
  }

  // kind: 1 = M1_co, 2 = M2_co, 3 = F_co
  std::int64_t coindex(int kind) const {
    std::int64_t s = 0;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (adj[u][v]) continue;
        const std::int64_t a = deg[u], b = deg[v];
        s += kind == 1 ? a + b : kind == 2 ? a * b : a * a + b * b;
      }
    }
    return s;
  }

  std::map<std::int64_t, std::int64_t> degree_counts() const {
    std::map<std::int64_t, std::int64_t> out;
    for (auto d : deg) ++out[d];
    return out;
  }
};

// Line graph by comparing every pair of edges: O(E^2), vertex i = edges[i].
inline std::vector<Pair> line_graph_edges(const std::vector<Pair>& edges) {
  std::vector<Pair> out;
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    for (std::uint32_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) out.emplace_back(i, j);
    }
  }
  return out;
}

// Uniform random simple graph with edge probability `density`.
inline std::vector<Pair> random_edges(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Pair> out;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (coin(rng)) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace oracle

#endif  // FTOPO_TESTS_ORACLE_HPP
