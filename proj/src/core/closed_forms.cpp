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

#include "closed_forms.hpp"

#include <string>

#include "errors.hpp"

namespace ftopo {
namespace {

Exact param(const Params& params, const char* name) { return params.at(name); }

// Profile builder over signed counts; a negative class means the parameters
// lie outside the range where the published counting holds.
DegreeMultiset profile_of(std::initializer_list<std::pair<Exact, Exact>> classes) {
  DegreeMultiset out;
  for (auto [degree, count] : classes) {
    if (degree.value() < 0 || count.value() < 0) {
      throw DomainError("degree profile has a negative class for these parameters");
    }
    out.add(static_cast<std::uint64_t>(degree.value()), static_cast<std::uint64_t>(count.value()));
  }
  return out;
}

DegreeMultiset cycle_profile(const Params& ps) {
  Exact n = param(ps, "n");
  return profile_of({{2, 2 * n}});
}

DegreeMultiset star_profile(const Params& ps) {
  Exact n = param(ps, "n");
  return profile_of({{n - 1, n - 1}, {1, n - 1}});
}

DegreeMultiset tadpole_profile(const Params& ps) {
  Exact n = param(ps, "n"), k = param(ps, "k");
  return profile_of({{3, 3}, {1, 1}, {2, 2 * n + 2 * k - 4}});
}

DegreeMultiset wheel_profile(const Params& ps) {
  Exact n = param(ps, "n");
  return profile_of({{3, 3 * n}, {n, n}});
}

DegreeMultiset ladder_profile(const Params& ps) {
  Exact n = param(ps, "n");
  return profile_of({{2, 8}, {3, 6 * n - 12}});
}

DegreeMultiset grid_profile(const Params& ps) {
  Exact m = param(ps, "m"), n = param(ps, "n");
  return profile_of({{2, 8}, {3, 6 * (n - 2) + 6 * (m - 2)}, {4, 4 * (m - 2) * (n - 2)}});
}

DegreeMultiset lattice_profile(const Params& ps) {
  Exact p = param(ps, "p"), q = param(ps, "q");
  return profile_of({{2, 4 * p + 4 * q}, {3, 12 * p * q - 6 * p - 6 * q}});
}

DegreeMultiset nanotube_profile(const Params& ps) {
  Exact p = param(ps, "p"), q = param(ps, "q");
  return profile_of({{1, 2 * q}, {2, 4 * p}, {3, 12 * p * q - 6 * p}});
}

DegreeMultiset nanotorus_profile(const Params& ps) {
  Exact p = param(ps, "p"), q = param(ps, "q");
  return profile_of({{1, 2 * p + 2 * q}, {3, 12 * p * q}});
}

std::vector<TheoremRecord> build_registry() {
  using P = const Params&;
  const std::vector<std::string_view> n_only{"n"};
  const std::vector<std::string_view> pq{"p", "q"};
  std::vector<TheoremRecord> r;

  r.push_back({TheoremId::kCycleF, "CYCLE_F", Family::kCycle, IndexKind::kF, n_only, {3},
               "16n",
               [](P ps) { return (16 * param(ps, "n")).value(); }, cycle_profile});
  r.push_back({TheoremId::kCycleFCo, "CYCLE_FCO", Family::kCycle, IndexKind::kFCo, n_only, {3},
               "16n^2 - 16n",
               [](P ps) {
                 Exact n = param(ps, "n");
                 return (16 * n * n - 16 * n).value();
               },
               cycle_profile});
  r.push_back({TheoremId::kStarF, "STAR_F", Family::kStar, IndexKind::kF, n_only, {3},
               "n(n - 1)(n^2 - 3n + 3)",
               [](P ps) {
                 Exact n = param(ps, "n");
                 return (n * (n - 1) * (n * n - 3 * n + 3)).value();
               },
               star_profile});
  r.push_back({TheoremId::kStarFCo, "STAR_FCO", Family::kStar, IndexKind::kFCo, n_only, {3},
               "(n - 1)(n - 2)(n^2 - 2n + 3)",
               [](P ps) {
                 Exact n = param(ps, "n");
                 return ((n - 1) * (n - 2) * (n * n - 2 * n + 3)).value();
               },
               star_profile});
  r.push_back({TheoremId::kTadpoleF, "TADPOLE_F", Family::kTadpole, IndexKind::kF, {"n", "k"},
               {3, 1}, "16n + 16k + 50",
               [](P ps) { return (16 * param(ps, "n") + 16 * param(ps, "k") + 50).value(); },
               tadpole_profile});
  r.push_back({TheoremId::kTadpoleFCo, "TADPOLE_FCO", Family::kTadpole, IndexKind::kFCo,
               {"n", "k"}, {3, 1}, "16(n + k)^2 - 57",
               [](P ps) {
                 Exact s = param(ps, "n") + param(ps, "k");
                 return (16 * s * s - 57).value();
               },
               tadpole_profile});
  r.push_back({TheoremId::kWheelF, "WHEEL_F", Family::kWheel, IndexKind::kF, n_only, {3},
               "n(n^3 + 81)",
               [](P ps) {
                 Exact n = param(ps, "n");
                 return (n * (n * n * n + 81)).value();
               },
               wheel_profile});
  r.push_back({TheoremId::kWheelFCo, "WHEEL_FCO", Family::kWheel, IndexKind::kFCo, n_only, {3},
               "2n(n^3 + 56n - 56)",
               [](P ps) {
                 Exact n = param(ps, "n");
                 return (2 * n * (n * n * n + 56 * n - 56)).value();
               },
               wheel_profile});
  r.push_back({TheoremId::kLadderF, "LADDER_F", Family::kLadder, IndexKind::kF, n_only, {2},
               "162n - 260",
               [](P ps) { return (162 * param(ps, "n") - 260).value(); }, ladder_profile});
  r.push_back({TheoremId::kLadderFCo, "LADDER_FCO", Family::kLadder, IndexKind::kFCo, n_only,
               {2}, "324n^2 - 832n + 532",
               [](P ps) {
                 Exact n = param(ps, "n");
                 return (324 * n * n - 832 * n + 532).value();
               },
               ladder_profile});
  r.push_back({TheoremId::kGridF, "GRID_F", Family::kGrid, IndexKind::kF, {"m", "n"}, {2, 2},
               "256mn - 350m - 350n + 440",
               [](P ps) {
                 Exact m = param(ps, "m"), n = param(ps, "n");
                 return (256 * m * n - 350 * m - 350 * n + 440).value();
               },
               grid_profile});
  r.push_back({TheoremId::kLatticeF, "LATTICE_F", Family::kTucLattice, IndexKind::kF, pq, {1, 1},
               "324pq - 130p - 130q",
               [](P ps) {
                 Exact p = param(ps, "p"), q = param(ps, "q");
                 return (324 * p * q - 130 * p - 130 * q).value();
               },
               lattice_profile});
  r.push_back({TheoremId::kNanotubeF, "NANOTUBE_F", Family::kTucNanotube, IndexKind::kF, pq,
               {1, 1}, "324pq - 130p + 2q",
               [](P ps) {
                 Exact p = param(ps, "p"), q = param(ps, "q");
                 return (324 * p * q - 130 * p + 2 * q).value();
               },
               nanotube_profile});
  r.push_back({TheoremId::kNanotorusF, "NANOTORUS_F", Family::kTucNanotorus, IndexKind::kF, pq,
               {1, 1}, "324pq + 2p + 2q",
               [](P ps) {
                 Exact p = param(ps, "p"), q = param(ps, "q");
                 return (324 * p * q + 2 * p + 2 * q).value();
               },
               nanotorus_profile});
  return r;
}

}  // namespace

std::span<const TheoremRecord> theorem_registry() {
  static const std::vector<TheoremRecord> registry = build_registry();
  return registry;
}

const TheoremRecord& theorem(TheoremId id) {
  return theorem_registry()[static_cast<std::size_t>(id)];
}

const TheoremRecord& find_theorem(std::string_view name) {
  for (const TheoremRecord& record : theorem_registry()) {
    if (record.name == name) return record;
  }
  throw LookupError("unknown theorem id '" + std::string(name) + "'");
}

void check_theorem_params(const TheoremRecord& record, const Params& params) {
  for (const auto& [name, value] : params) {
    bool known = false;
    for (auto p : record.params) known = known || p == name;
    if (!known) {
      throw ParseError(std::string(record.name) + " does not take parameter '" + name + "'");
    }
  }
  for (std::size_t i = 0; i < record.params.size(); ++i) {
    const std::string name(record.params[i]);
    auto it = params.find(name);
    if (it == params.end()) {
      throw ParseError(std::string(record.name) + " requires parameter '" + name + "'");
    }
    if (it->second < record.minimum[i]) {
      throw DomainError(std::string(record.name) + " is stated for " + name +
                        " >= " + std::to_string(record.minimum[i]) + " (got " + name + "=" +
                        std::to_string(it->second) + ")");
    }
  }
}

FamilySpec theorem_family_spec(const TheoremRecord& record, const Params& params) {
  return FamilySpec{record.family, params, {Transform::kSubdivide, Transform::kLineGraph}};
}

Int paper_formula(TheoremId id, const Params& params) {
  const TheoremRecord& record = theorem(id);
  check_theorem_params(record, params);
  return record.formula(params);
}

DegreeMultiset paper_degree_profile(TheoremId id, const Params& params) {
  const TheoremRecord& record = theorem(id);
  check_theorem_params(record, params);
  return record.profile(params);
}

Int f_from_profile(const DegreeMultiset& profile) {
  Exact sum = 0;
  for (auto [degree, count] : profile.counts()) {
    Exact d = checked::from(degree);
    sum = sum + Exact(checked::from(count)) * d * d * d;
  }
  return sum.value();
}

Int fco_from_profile(const DegreeMultiset& profile) {
  if (profile.total() == 0) return 0;
  Exact squares = 0;
  for (auto [degree, count] : profile.counts()) {
    Exact d = checked::from(degree);
    squares = squares + Exact(checked::from(count)) * d * d;
  }
  Exact others = checked::from(profile.total() - 1);
  return (others * squares - f_from_profile(profile)).value();
}

}  // namespace ftopo
