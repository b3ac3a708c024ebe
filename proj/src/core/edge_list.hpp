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

// Plain-text edge list:
//
//   <vertex_count> <edge_count>\n
//   <u> <v>\n            (edge_count lines, 0-based)
//
// The writer emits canonical edges (u < v) in lexicographic order, single
// spaces and '\n' line endings, so its output is byte-stable. The reader
// accepts either endpoint order and any edge order, tolerates trailing blank
// lines and '\r', and reports the offending line on malformed input.

#ifndef FTOPO_CORE_EDGE_LIST_HPP
#define FTOPO_CORE_EDGE_LIST_HPP

#include <string>
#include <string_view>

#include "graph.hpp"

namespace ftopo {

std::string write_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view content);  // throws ParseError

}  // namespace ftopo

#endif  // FTOPO_CORE_EDGE_LIST_HPP
