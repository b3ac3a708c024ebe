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

#include "edge_list.hpp"

#include <charconv>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include "errors.hpp"
#include "text.hpp"

namespace ftopo {
namespace {

std::uint64_t parse_count(std::string_view token, const std::string& where) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(where + "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::string line_label(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

}  // namespace

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph parse_edge_list(std::string_view content) {
  auto lines = text::split(content, '\n');
  std::size_t line_no = 0;
  auto next_line = [&]() -> std::optional<std::string_view> {
    if (line_no >= lines.size()) return std::nullopt;
    return lines[line_no++];
  };

  auto header = next_line();
  auto header_fields = header ? text::fields(*header) : std::vector<std::string_view>{};
  if (header_fields.size() != 2) {
    throw ParseError(line_label(1) + "expected header '<vertex_count> <edge_count>'");
  }
  const std::uint64_t vertex_count = parse_count(header_fields[0], line_label(1));
  const std::uint64_t edge_count = parse_count(header_fields[1], line_label(1));
  if (vertex_count > std::numeric_limits<Vertex>::max()) {
    throw ParseError(line_label(1) + "vertex count exceeds 32-bit vertex ids");
  }

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::uint64_t i = 0; i < edge_count; ++i) {
    auto line = next_line();
    const std::string where = line_label(line_no);
    if (!line) {
      throw ParseError("line " + std::to_string(line_no + 1) + ": expected " +
                       std::to_string(edge_count) + " edges, file ends after " +
                       std::to_string(i));
    }
    auto f = text::fields(*line);
    if (f.size() != 2) throw ParseError(where + "expected '<u> <v>'");
    const std::uint64_t u = parse_count(f[0], where);
    const std::uint64_t v = parse_count(f[1], where);
    if (u >= vertex_count || v >= vertex_count) {
      throw ParseError(where + "vertex out of range in edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + "); vertex_count is " + std::to_string(vertex_count));
    }
    if (u == v) throw ParseError(where + "self-loop on vertex " + std::to_string(u));
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) {
      throw ParseError(where + "duplicate edge (" + std::to_string(e.u) + ", " +
                       std::to_string(e.v) + ")");
    }
    edges.push_back(e);
  }
  while (auto extra = next_line()) {
    if (!text::fields(*extra).empty()) {
      throw ParseError(line_label(line_no) + "unexpected content after " +
                       std::to_string(edge_count) + " edges");
    }
  }
  return Graph::build(vertex_count, std::move(edges));
}

}  // namespace ftopo
