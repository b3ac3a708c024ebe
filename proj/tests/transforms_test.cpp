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

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

namespace ftopo {
namespace {

using testing::multiset;
using testing::spec;

bool is_cycle(const Graph& g) {
  // Connected and 2-regular.
  if (degree_multiset(g) != multiset({{2, g.vertex_count()}})) return false;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack{0};
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = true;
    ++reached;
    for (Vertex w : g.neighbors(v)) stack.push_back(w);
  }
  return reached == g.vertex_count();
}

TEST(Subdivide, CycleBecomesLongerCycle) {
  Graph s = subdivide(spec("cycle:n=4"));
  EXPECT_EQ(s.vertex_count(), 8u);
  EXPECT_EQ(s.edge_count(), 8u);
  EXPECT_TRUE(is_cycle(s));
}

TEST(Subdivide, Star) {
  Graph s = subdivide(spec("star:n=4"));
  EXPECT_EQ(s.vertex_count(), 7u);
  EXPECT_EQ(s.edge_count(), 6u);
  EXPECT_EQ(degree_multiset(s), multiset({{3, 1}, {2, 3}, {1, 3}}));
}

TEST(Subdivide, SingleEdgeGivesP3) {
  EXPECT_EQ(subdivide(spec("path:n=2")), build_graph(3, {{0, 2}, {1, 2}}));
}

TEST(Subdivide, LabelsNewVertexByEdgeIndex) {
  Graph g = build_graph(3, {{0, 1}, {1, 2}});
  Graph s = subdivide(g);
  // Edge 0 = (0,1) -> vertex 3; edge 1 = (1,2) -> vertex 4.
  EXPECT_TRUE(s.adjacent(3, 0) && s.adjacent(3, 1));
  EXPECT_TRUE(s.adjacent(4, 1) && s.adjacent(4, 2));
}

TEST(LineGraph, Examples) {
  EXPECT_EQ(line_graph(spec("path:n=3")), spec("path:n=2"));
  Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(line_graph(k3), k3);
  Graph c = line_graph(subdivide(spec("cycle:n=4")));
  EXPECT_EQ(c.vertex_count(), 8u);
  EXPECT_EQ(c.edge_count(), 8u);
  EXPECT_TRUE(is_cycle(c));
}

TEST(LineGraph, EdgelessAndEmpty) {
  EXPECT_EQ(line_graph(build_graph(5, {})).vertex_count(), 0u);
  EXPECT_EQ(line_graph(build_graph(0, {})).vertex_count(), 0u);
  EXPECT_EQ(subdivide(build_graph(0, {})).vertex_count(), 0u);
}

TEST(Complement, Examples) {
  Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(complement(k3), build_graph(3, {}));
  // C4 = 0-1-2-3-0; complement is the two diagonals.
  EXPECT_EQ(complement(spec("cycle:n=4")), build_graph(4, {{0, 2}, {1, 3}}));
  Graph c5 = spec("cycle:n=5");
  EXPECT_EQ(complement(complement(c5)), c5);
}

// Property sweep over random graphs, checked against the O(E^2) oracle.
TEST(TransformProperties, RandomGraphs) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 25;
    const double density = 0.05 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    Graph g = build_graph(n, testing::edges_of(oracle::random_edges(n, density, rng)));

    Graph s = subdivide(g);
    EXPECT_EQ(s.vertex_count(), g.vertex_count() + g.edge_count());
    EXPECT_EQ(s.edge_count(), 2 * g.edge_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(s.degree(v), g.degree(v));
    for (Vertex v = static_cast<Vertex>(g.vertex_count()); v < s.vertex_count(); ++v) {
      EXPECT_EQ(s.degree(v), 2u);
    }

    Graph l = line_graph(g);
    EXPECT_EQ(l, build_graph(g.edge_count(), testing::edges_of(oracle::line_graph_edges(testing::pairs_of(g)))));
    auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      EXPECT_EQ(l.degree(static_cast<Vertex>(i)), g.degree(edges[i].u) + g.degree(edges[i].v) - 2);
    }

    Graph c = complement(g);
    EXPECT_EQ(complement(c), g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      EXPECT_EQ(g.degree(v) + c.degree(v), g.vertex_count() - 1);
    }
  }
}

}  // namespace
}  // namespace ftopo
