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

// Degree-based indices and coindices, computed exactly in int64 with
// overflow detection (see checked.hpp for the headroom).
//
// Coindices sum over unordered pairs of distinct non-adjacent vertices and
// always use degrees taken in the graph itself, not in its complement.

#ifndef FTOPO_CORE_INDICES_HPP
#define FTOPO_CORE_INDICES_HPP

#include <cstddef>
#include <string_view>

#include "checked.hpp"
#include "graph.hpp"

namespace ftopo {

enum class IndexKind { kM1, kM2, kF, kM1Co, kM2Co, kFCo };

inline constexpr IndexKind kAllIndexKinds[] = {IndexKind::kM1,   IndexKind::kM2,
                                               IndexKind::kF,    IndexKind::kM1Co,
                                               IndexKind::kM2Co, IndexKind::kFCo};

std::string_view index_name(IndexKind kind);        // "M1", ..., "F_co"
IndexKind index_from_name(std::string_view name);  // throws LookupError

// Graphs with at most this many vertices get their coindices by O(V^2) pair
// enumeration; above it the O(V) identity forms are used.
inline constexpr std::size_t kEnumerationCutoff = 2000;

Int m1(const Graph& g);
Int m2(const Graph& g);

// Sum of d^3 over vertices, cross-checked against the edge form
// sum of d(u)^2 + d(v)^2 over edges. Throws ConsistencyError on disagreement.
Int f_index(const Graph& g);
Int f_index_vertex_form(const Graph& g);
Int f_index_edge_form(const Graph& g);

// Brute-force sum over non-adjacent pairs. kind must be a coindex.
Int pairwise_coindex(const Graph& g, IndexKind kind);

// (|V| - 1) * M1 - F: each vertex lies in |V| - 1 unordered pairs, and the
// adjacent ones account for exactly F.
Int f_coindex_via_identity(const Graph& g);

// sum over v of d(v) * (|V| - 1 - d(v)), the pairwise M1 coindex regrouped
// per vertex.
Int m1_coindex_per_vertex(const Graph& g);

// (S^2 - M1) / 2 - M2 where S = 2|E|: all pair products minus the adjacent ones.
Int m2_coindex_via_identity(const Graph& g);

// Index value using the cheapest exact route: pair enumeration for coindices
// up to `enumeration_cutoff` vertices, the identity forms above it.
Int compute_index(const Graph& g, IndexKind kind,
                  std::size_t enumeration_cutoff = kEnumerationCutoff);

}  // namespace ftopo

#endif  // FTOPO_CORE_INDICES_HPP
