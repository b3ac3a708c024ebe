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

#include "indices.hpp"

#include <string>
#include <vector>

#include "errors.hpp"

namespace ftopo {
namespace {

constexpr std::string_view kNames[] = {"M1", "M2", "F", "M1_co", "M2_co", "F_co"};

std::vector<Int> int_degrees(const Graph& g) {
  std::vector<Int> out;
  out.reserve(g.vertex_count());
  for (std::size_t d : g.degrees()) out.push_back(checked::from(d));
  return out;
}

Int pair_term(IndexKind kind, Int du, Int dv) {
  switch (kind) {
    case IndexKind::kM1Co:
      return checked::add(du, dv);
    case IndexKind::kM2Co:
      return checked::mul(du, dv);
    case IndexKind::kFCo:
      return checked::add(checked::square(du), checked::square(dv));
    default:
      throw LookupError("pairwise_coindex needs a coindex kind, got " +
                        std::string(index_name(kind)));
  }
}

}  // namespace

std::string_view index_name(IndexKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

IndexKind index_from_name(std::string_view name) {
  for (IndexKind kind : kAllIndexKinds) {
    if (index_name(kind) == name) return kind;
  }
  throw LookupError("unknown index '" + std::string(name) + "' (expected M1, M2, F, M1_co, M2_co or F_co)");
}

Int m1(const Graph& g) {
  Int sum = 0;
  for (Int d : int_degrees(g)) sum = checked::add(sum, checked::square(d));
  return sum;
}

Int m2(const Graph& g) {
  const auto deg = int_degrees(g);
  Int sum = 0;
  for (const Edge& e : g.edges()) sum = checked::add(sum, checked::mul(deg[e.u], deg[e.v]));
  return sum;
}

Int f_index_vertex_form(const Graph& g) {
  DegreeMultiset ms = degree_multiset(g);
  Int sum = 0;
  for (auto [degree, count] : ms.counts()) {
    sum = checked::add(sum, checked::mul(checked::from(count), checked::cube(checked::from(degree))));
  }
  return sum;
}

Int f_index_edge_form(const Graph& g) {
  const auto deg = int_degrees(g);
  Int sum = 0;
  for (const Edge& e : g.edges()) {
    sum = checked::add(sum, checked::add(checked::square(deg[e.u]), checked::square(deg[e.v])));
  }
  return sum;
}

Int f_index(const Graph& g) {
  const Int vertex_form = f_index_vertex_form(g);
  const Int edge_form = f_index_edge_form(g);
  if (vertex_form != edge_form) {
    throw ConsistencyError("F vertex form " + std::to_string(vertex_form) +
                           " disagrees with edge form " + std::to_string(edge_form));
  }
  return vertex_form;
}

Int pairwise_coindex(const Graph& g, IndexKind kind) {
  pair_term(kind, 0, 0);  // rejects non-coindex kinds up front
  const auto deg = int_degrees(g);
  const std::size_t n = g.vertex_count();
  std::vector<char> is_neighbor(n, 0);
  Int sum = 0;
  for (Vertex u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    for (Vertex w : nu) is_neighbor[w] = 1;
    for (Vertex v = u + 1; v < n; ++v) {
      if (!is_neighbor[v]) sum = checked::add(sum, pair_term(kind, deg[u], deg[v]));
    }
    for (Vertex w : nu) is_neighbor[w] = 0;
  }
  return sum;
}

Int f_coindex_via_identity(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  const Int pairs_per_vertex = checked::from(g.vertex_count() - 1);
  return checked::sub(checked::mul(pairs_per_vertex, m1(g)), f_index(g));
}

Int m1_coindex_per_vertex(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  const Int others = checked::from(g.vertex_count() - 1);
  Int sum = 0;
  for (Int d : int_degrees(g)) sum = checked::add(sum, checked::mul(d, checked::sub(others, d)));
  return sum;
}

Int m2_coindex_via_identity(const Graph& g) {
  const Int degree_sum = checked::mul(2, checked::from(g.edge_count()));
  const Int all_pairs = checked::sub(checked::square(degree_sum), m1(g)) / 2;
  return checked::sub(all_pairs, m2(g));
}

Int compute_index(const Graph& g, IndexKind kind, std::size_t enumeration_cutoff) {
  const bool enumerate = g.vertex_count() <= enumeration_cutoff;
  switch (kind) {
    case IndexKind::kM1:
      return m1(g);
    case IndexKind::kM2:
      return m2(g);
    case IndexKind::kF:
      return f_index(g);
    case IndexKind::kM1Co:
      return enumerate ? pairwise_coindex(g, kind) : m1_coindex_per_vertex(g);
    case IndexKind::kM2Co:
      return enumerate ? pairwise_coindex(g, kind) : m2_coindex_via_identity(g);
    case IndexKind::kFCo:
      return enumerate ? pairwise_coindex(g, kind) : f_coindex_via_identity(g);
  }
  throw LookupError("unhandled index kind");
}

}  // namespace ftopo
