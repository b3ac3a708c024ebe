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

#ifndef FTOPO_CORE_FAMILIES_HPP
#define FTOPO_CORE_FAMILIES_HPP

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "checked.hpp"
#include "graph.hpp"

namespace ftopo {

enum class Family {
  kPath,
  kCycle,
  kStar,
  kWheel,
  kTadpole,
  kLadder,
  kGrid,
  kTucLattice,
  kTucNanotube,
  kTucNanotorus,
};

enum class Transform { kSubdivide, kLineGraph };

// Named integer parameters (n, k, m, p, q).
using Params = std::map<std::string, Int>;

struct FamilySpec {
  Family family = Family::kPath;
  Params params;
  std::vector<Transform> transforms;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view family_name(Family f);
Family family_from_name(std::string_view name);  // throws LookupError
std::string_view transform_name(Transform t);
Transform transform_from_name(std::string_view name);  // throws LookupError

// Parameter names in canonical order, e.g. {"n", "k"} for the tadpole.
std::span<const std::string_view> family_param_names(Family f);

// Throws DomainError naming the violated constraint, or ParseError when a
// parameter is missing or not accepted by the family.
void check_family_params(Family f, const Params& params);

// "<family>:<param>=<int>[,<param>=<int>][|<transform>[,<transform>]]"
FamilySpec parse_family_spec(std::string_view text);
std::string format_family_spec(const FamilySpec& spec);

// Base family graph without transforms. Labeling:
//   path/cycle   0..n-1 along the path, cycle closes with (n-1, 0)
//   star         center 0, leaves 1..n-1
//   wheel        hub 0, rim 1..n in cyclic order
//   tadpole      cycle 0..n-1, tail n..n+k-1 hanging off vertex 0
//   ladder/grid  (i, j) -> i*n + j with i < m (m = 2 for the ladder)
//   tuc_*        cell (i, j) owns 4(i*q + j) + {0:N, 1:E, 2:S, 3:W}
Graph generate_base(Family f, const Params& params);

// Base graph with the transform chain applied left to right.
Graph generate(const FamilySpec& spec);

Graph apply_transforms(Graph g, std::span<const Transform> transforms);

}  // namespace ftopo

#endif  // FTOPO_CORE_FAMILIES_HPP
