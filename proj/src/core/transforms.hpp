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

#ifndef FTOPO_CORE_TRANSFORMS_HPP
#define FTOPO_CORE_TRANSFORMS_HPP

#include "graph.hpp"

namespace ftopo {

// S(g): original vertices keep their ids; the i-th canonical edge (u, v)
// becomes vertex vertex_count + i joined to u and v.
Graph subdivide(const Graph& g);

// L(g): vertex i stands for the i-th canonical edge of g; two vertices are
// adjacent iff their edges share an endpoint. Edgeless input gives the empty
// graph.
Graph line_graph(const Graph& g);

// Same vertex set, complementary edge set.
Graph complement(const Graph& g);

}  // namespace ftopo

#endif  // FTOPO_CORE_TRANSFORMS_HPP
