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

#ifndef FTOPO_CORE_GRAPH_HPP
#define FTOPO_CORE_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace ftopo {

using Vertex = std::uint32_t;

// Unordered vertex pair. Inside a Graph every edge is stored canonically with
// u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph on vertices 0..vertex_count-1.
//
// Edges are kept sorted lexicographically in canonical (min, max) form; the
// position of an edge in edges() is its edge index, which transforms use to
// label derived vertices. Adjacency is stored in CSR form with each neighbor
// list sorted ascending.
class Graph {
 public:
  Graph() = default;

  // Validates and canonicalizes `edges`. Throws GraphError on a self-loop, a
  // duplicate (in either orientation) or an endpoint >= vertex_count. The
  // result does not depend on the order of `edges`.
  static Graph build(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  // Throws IndexError when v is out of range.
  std::size_t degree(Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  // Degree sequence indexed by vertex.
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

inline Graph build_graph(std::size_t vertex_count, std::vector<Edge> edges) {
  return Graph::build(vertex_count, std::move(edges));
}

// Multiplicity of each degree value. Zero multiplicities are never stored, so
// two multisets compare equal iff they describe the same degree sequence up
// to order.
class DegreeMultiset {
 public:
  using Counts = std::map<std::uint64_t, std::uint64_t>;

  DegreeMultiset() = default;
  explicit DegreeMultiset(const Counts& counts);

  // Adds `count` vertices of degree `degree`; merges with an existing class.
  void add(std::uint64_t degree, std::uint64_t count);

  const Counts& counts() const { return counts_; }
  std::uint64_t total() const { return total_; }
  std::uint64_t count(std::uint64_t degree) const;
  // Sum of degree * multiplicity; 2|E| for a multiset taken from a graph.
  std::uint64_t degree_sum() const;

  friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;

 private:
  Counts counts_;
  std::uint64_t total_ = 0;
};

DegreeMultiset degree_multiset(const Graph& g);

}  // namespace ftopo

#endif  // FTOPO_CORE_GRAPH_HPP
