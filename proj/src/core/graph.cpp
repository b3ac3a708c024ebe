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

#include "graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "errors.hpp"

namespace ftopo {
namespace {

std::string pair_text(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

}  // namespace

Graph Graph::build(std::size_t vertex_count, std::vector<Edge> edges) {
  if (vertex_count > std::numeric_limits<Vertex>::max()) {
    throw GraphError("vertex count " + std::to_string(vertex_count) + " exceeds 32-bit vertex ids");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Edge& e = edges[i];
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw GraphError("edge " + pair_text(e) + " at position " + std::to_string(i) +
                       " has an endpoint outside [0, " + std::to_string(vertex_count) + ")");
    }
    if (e.u == e.v) {
      throw GraphError("self-loop " + pair_text(e) + " at position " + std::to_string(i));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw GraphError("duplicate edge " + pair_text(*dup));
  }

  Graph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);

  g.offsets_.assign(vertex_count + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) g.adjacency_[fill[e.u]++] = e.v;
  for (const Edge& e : g.edges_) g.adjacency_[fill[e.v]++] = e.u;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= vertex_count_) {
    throw IndexError("vertex " + std::to_string(v) + " out of range for graph with " +
                     std::to_string(vertex_count_) + " vertices");
  }
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  return offsets_[v + 1] - offsets_[v];
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return std::span<const Vertex>(adjacency_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nu = neighbors(u);
  check_vertex(v);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(vertex_count_);
  for (std::size_t v = 0; v < vertex_count_; ++v) out[v] = offsets_[v + 1] - offsets_[v];
  return out;
}

DegreeMultiset::DegreeMultiset(const Counts& counts) {
  for (auto [degree, count] : counts) add(degree, count);
}

void DegreeMultiset::add(std::uint64_t degree, std::uint64_t count) {
  if (count == 0) return;
  counts_[degree] += count;
  total_ += count;
}

std::uint64_t DegreeMultiset::count(std::uint64_t degree) const {
  auto it = counts_.find(degree);
  return it == counts_.end() ? 0 : it->second;
}

std::uint64_t DegreeMultiset::degree_sum() const {
  std::uint64_t sum = 0;
  for (auto [degree, count] : counts_) sum += degree * count;
  return sum;
}

DegreeMultiset degree_multiset(const Graph& g) {
  DegreeMultiset out;
  for (std::size_t d : g.degrees()) out.add(d, 1);
  return out;
}

}  // namespace ftopo
