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

#include "transforms.hpp"

#include <vector>

namespace ftopo {

Graph subdivide(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges;
  edges.reserve(2 * g.edge_count());
  Vertex mid = n;
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, mid});
    edges.push_back({e.v, mid});
    ++mid;
  }
  return Graph::build(g.vertex_count() + g.edge_count(), std::move(edges));
}

Graph line_graph(const Graph& g) {
  // Edge ids incident to each vertex; every pair of them is a line-graph edge.
  // Two distinct edges of a simple graph share at most one endpoint, so no
  // pair is produced twice.
  std::vector<std::vector<Vertex>> incident(g.vertex_count());
  auto all = g.edges();
  for (std::size_t i = 0; i < all.size(); ++i) {
    incident[all[i].u].push_back(static_cast<Vertex>(i));
    incident[all[i].v].push_back(static_cast<Vertex>(i));
  }
  std::vector<Edge> edges;
  for (const auto& ids : incident) {
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) edges.push_back({ids[a], ids[b]});
    }
  }
  return Graph::build(g.edge_count(), std::move(edges));
}

Graph complement(const Graph& g) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    auto it = nu.begin();
    for (Vertex v = u + 1; v < n; ++v) {
      while (it != nu.end() && *it < v) ++it;
      if (it != nu.end() && *it == v) continue;
      edges.push_back({u, v});
    }
  }
  return Graph::build(g.vertex_count(), std::move(edges));
}

}  // namespace ftopo
