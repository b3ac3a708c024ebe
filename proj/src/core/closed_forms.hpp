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

// Published closed forms for F and F-coindex of L(S(G)) over several graph
// families, plus the degree profiles their derivations rely on.
//
// Formulas and profiles are stored exactly as published, including those
// that disagree with direct computation. Judging them is the verifier's job.

#ifndef FTOPO_CORE_CLOSED_FORMS_HPP
#define FTOPO_CORE_CLOSED_FORMS_HPP

#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "checked.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "indices.hpp"

namespace ftopo {

enum class TheoremId {
  kCycleF,
  kCycleFCo,
  kStarF,
  kStarFCo,
  kTadpoleF,
  kTadpoleFCo,
  kWheelF,
  kWheelFCo,
  kLadderF,
  kLadderFCo,
  kGridF,
  kLatticeF,
  kNanotubeF,
  kNanotorusF,
};

struct TheoremRecord {
  TheoremId id;
  std::string_view name;  // stable string id, e.g. "TADPOLE_FCO"
  Family family;          // base family; the graph studied is L(S(base))
  IndexKind index;        // kF or kFCo
  std::vector<std::string_view> params;
  std::vector<Int> minimum;  // domain lower bound per parameter
  std::string_view formula_text;
  std::function<Int(const Params&)> formula;
  std::function<DegreeMultiset(const Params&)> profile;
};

std::span<const TheoremRecord> theorem_registry();
const TheoremRecord& theorem(TheoremId id);
const TheoremRecord& find_theorem(std::string_view name);  // throws LookupError

// Throws DomainError (or ParseError for missing/unknown names).
void check_theorem_params(const TheoremRecord& record, const Params& params);

// Family spec of the analysed graph: base family with [subdivide, line_graph].
FamilySpec theorem_family_spec(const TheoremRecord& record, const Params& params);

Int paper_formula(TheoremId id, const Params& params);
DegreeMultiset paper_degree_profile(TheoremId id, const Params& params);

// sum c * d^3 over the profile.
Int f_from_profile(const DegreeMultiset& profile);
// (total - 1) * sum c * d^2 - sum c * d^3.
Int fco_from_profile(const DegreeMultiset& profile);

}  // namespace ftopo

#endif  // FTOPO_CORE_CLOSED_FORMS_HPP
