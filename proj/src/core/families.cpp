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

#include "families.hpp"

#include <array>
#include <charconv>
#include <limits>
#include <string>

#include "errors.hpp"
#include "text.hpp"
#include "transforms.hpp"

namespace ftopo {
namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::vector<std::string_view> params;
  std::vector<Int> minimum;  // parallel to params
};

const std::array<FamilyInfo, 10>& family_table() {
  static const std::array<FamilyInfo, 10> table{{
      {Family::kPath, "path", {"n"}, {1}},
      {Family::kCycle, "cycle", {"n"}, {3}},
      {Family::kStar, "star", {"n"}, {2}},
      {Family::kWheel, "wheel", {"n"}, {3}},
      {Family::kTadpole, "tadpole", {"n", "k"}, {3, 1}},
      {Family::kLadder, "ladder", {"n"}, {2}},
      {Family::kGrid, "grid", {"m", "n"}, {2, 2}},
      {Family::kTucLattice, "tuc_lattice", {"p", "q"}, {1, 1}},
      {Family::kTucNanotube, "tuc_nanotube", {"p", "q"}, {1, 1}},
      {Family::kTucNanotorus, "tuc_nanotorus", {"p", "q"}, {1, 1}},
  }};
  return table;
}

const FamilyInfo& info(Family f) { return family_table()[static_cast<std::size_t>(f)]; }

// Vertex ids are 32-bit; refuse parameters that would not fit before
// allocating anything.
Vertex checked_order(Int order) {
  if (order > static_cast<Int>(std::numeric_limits<Vertex>::max())) {
    throw DomainError("graph order " + std::to_string(order) + " exceeds 32-bit vertex ids");
  }
  return static_cast<Vertex>(order);
}

Graph grid_graph(Int rows, Int cols) {
  const Vertex m = checked_order(rows);
  const Vertex n = checked_order(cols);
  const Vertex order = checked_order(checked::mul(rows, cols));
  std::vector<Edge> edges;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      const Vertex v = i * n + j;
      if (j + 1 < n) edges.push_back({v, v + 1});
      if (i + 1 < m) edges.push_back({v, v + n});
    }
  }
  return Graph::build(order, std::move(edges));
}

enum Corner : Vertex { kN = 0, kE = 1, kS = 2, kW = 3 };

Graph tuc_graph(Int p_param, Int q_param, bool wrap_p, bool wrap_q) {
  const Vertex p = checked_order(p_param);
  const Vertex q = checked_order(q_param);
  const Vertex order = checked_order(checked::mul(4, p_param, q_param));
  auto at = [q](Vertex i, Vertex j, Corner k) { return 4 * (i * q + j) + k; };

  std::vector<Edge> edges;
  for (Vertex i = 0; i < p; ++i) {
    for (Vertex j = 0; j < q; ++j) {
      edges.push_back({at(i, j, kN), at(i, j, kE)});
      edges.push_back({at(i, j, kE), at(i, j, kS)});
      edges.push_back({at(i, j, kS), at(i, j, kW)});
      edges.push_back({at(i, j, kW), at(i, j, kN)});
      if (i + 1 < p) edges.push_back({at(i, j, kE), at(i + 1, j, kW)});
      if (j + 1 < q) edges.push_back({at(i, j, kS), at(i, j + 1, kN)});
    }
  }
  if (wrap_p) {
    for (Vertex j = 0; j < q; ++j) edges.push_back({at(p - 1, j, kE), at(0, j, kW)});
  }
  if (wrap_q) {
    for (Vertex i = 0; i < p; ++i) edges.push_back({at(i, q - 1, kS), at(i, 0, kN)});
  }
  return Graph::build(order, std::move(edges));
}

Int parse_int(std::string_view text, std::string_view context) {
  Int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("invalid integer '" + std::string(text) + "' in " + std::string(context));
  }
  return value;
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

Family family_from_name(std::string_view name) {
  for (const auto& row : family_table()) {
    if (row.name == name) return row.family;
  }
  throw LookupError("unknown graph family '" + std::string(name) + "'");
}

std::string_view transform_name(Transform t) {
  return t == Transform::kSubdivide ? "subdivide" : "line_graph";
}

Transform transform_from_name(std::string_view name) {
  if (name == "subdivide") return Transform::kSubdivide;
  if (name == "line_graph") return Transform::kLineGraph;
  throw LookupError("unknown transform '" + std::string(name) + "'");
}

std::span<const std::string_view> family_param_names(Family f) { return info(f).params; }

void check_family_params(Family f, const Params& params) {
  const FamilyInfo& row = info(f);
  for (const auto& [name, value] : params) {
    bool known = false;
    for (auto p : row.params) known = known || p == name;
    if (!known) {
      throw ParseError(std::string(row.name) + " does not take parameter '" + name + "'");
    }
  }
  for (std::size_t i = 0; i < row.params.size(); ++i) {
    auto it = params.find(std::string(row.params[i]));
    if (it == params.end()) {
      throw ParseError(std::string(row.name) + " requires parameter '" +
                       std::string(row.params[i]) + "'");
    }
    if (it->second < row.minimum[i]) {
      throw DomainError(std::string(row.name) + " requires " + std::string(row.params[i]) +
                        " >= " + std::to_string(row.minimum[i]) + " (got " +
                        std::string(row.params[i]) + "=" + std::to_string(it->second) + ")");
    }
  }
}

FamilySpec parse_family_spec(std::string_view text) {
  const std::string context = "family spec '" + std::string(text) + "'";
  std::string_view head = text;
  std::string_view tail;
  bool has_tail = false;
  if (auto bar = text.find('|'); bar != std::string_view::npos) {
    head = text.substr(0, bar);
    tail = text.substr(bar + 1);
    has_tail = true;
  }
  auto colon = head.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("missing ':' after family name in " + context);
  }

  FamilySpec spec;
  spec.family = family_from_name(text::trim(head.substr(0, colon)));
  for (std::string_view item : text::split(head.substr(colon + 1), ',')) {
    item = text::trim(item);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected <param>=<int>, got '" + std::string(item) + "' in " + context);
    }
    std::string name(text::trim(item.substr(0, eq)));
    Int value = parse_int(text::trim(item.substr(eq + 1)), context);
    if (!spec.params.emplace(name, value).second) {
      throw ParseError("parameter '" + name + "' given twice in " + context);
    }
  }
  if (has_tail) {
    for (std::string_view item : text::split(tail, ',')) {
      spec.transforms.push_back(transform_from_name(text::trim(item)));
    }
  }
  check_family_params(spec.family, spec.params);
  return spec;
}

std::string format_family_spec(const FamilySpec& spec) {
  std::string out(family_name(spec.family));
  out += ':';
  bool first = true;
  for (auto name : family_param_names(spec.family)) {
    if (!first) out += ',';
    first = false;
    out += name;
    out += '=';
    out += std::to_string(spec.params.at(std::string(name)));
  }
  if (!spec.transforms.empty()) {
    out += '|';
    for (std::size_t i = 0; i < spec.transforms.size(); ++i) {
      if (i > 0) out += ',';
      out += transform_name(spec.transforms[i]);
    }
  }
  return out;
}

Graph generate_base(Family f, const Params& params) {
  check_family_params(f, params);
  auto get = [&](const char* name) { return params.at(name); };

  switch (f) {
    case Family::kPath:
    case Family::kCycle: {
      const Vertex n = checked_order(get("n"));
      std::vector<Edge> edges;
      for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      if (f == Family::kCycle) edges.push_back({n - 1, 0});
      return Graph::build(n, std::move(edges));
    }
    case Family::kStar: {
      const Vertex n = checked_order(get("n"));
      std::vector<Edge> edges;
      for (Vertex leaf = 1; leaf < n; ++leaf) edges.push_back({0, leaf});
      return Graph::build(n, std::move(edges));
    }
    case Family::kWheel: {
      const Vertex n = checked_order(get("n"));
      const Vertex order = checked_order(checked::add(get("n"), 1));
      std::vector<Edge> edges;
      for (Vertex r = 1; r <= n; ++r) {
        edges.push_back({0, r});
        edges.push_back({r, r == n ? 1 : r + 1});
      }
      return Graph::build(order, std::move(edges));
    }
    case Family::kTadpole: {
      const Vertex n = checked_order(get("n"));
      const Vertex order = checked_order(checked::add(get("n"), get("k")));
      std::vector<Edge> edges;
      for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({n - 1, 0});
      edges.push_back({0, n});
      for (Vertex t = n; t + 1 < order; ++t) edges.push_back({t, t + 1});
      return Graph::build(order, std::move(edges));
    }
    case Family::kLadder:
      return grid_graph(2, get("n"));
    case Family::kGrid:
      return grid_graph(get("m"), get("n"));
    case Family::kTucLattice:
      return tuc_graph(get("p"), get("q"), false, false);
    case Family::kTucNanotube:
      return tuc_graph(get("p"), get("q"), true, false);
    case Family::kTucNanotorus:
      return tuc_graph(get("p"), get("q"), true, true);
  }
  throw LookupError("unhandled family");
}

Graph apply_transforms(Graph g, std::span<const Transform> transforms) {
  for (Transform t : transforms) {
    g = t == Transform::kSubdivide ? subdivide(g) : line_graph(g);
  }
  return g;
}

Graph generate(const FamilySpec& spec) {
  Graph g = apply_transforms(generate_base(spec.family, spec.params), spec.transforms);
  // Handshake lemma; a failure here means a generator or transform bug.
  if (degree_multiset(g).degree_sum() != 2 * g.edge_count()) {
    throw ConsistencyError("degree sum of " + format_family_spec(spec) + " is not 2|E|");
  }
  return g;
}

}  // namespace ftopo
