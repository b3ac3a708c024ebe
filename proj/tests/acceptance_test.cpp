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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
//
// usage: acceptance_test <path-to-ftopo-cli> <expectations-file> <scratch-dir>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "families.hpp"
#include "indices.hpp"
#include "oracle.hpp"
#include "test_util.hpp"
#include "verifier.hpp"

namespace {

using namespace ftopo;

// Collects the first few failure messages of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    ++failed_;
    if (notes_.size() < 5) notes_.push_back(what);
  }
  bool ok() const { return failed_ == 0 && checked_ > 0; }
  std::string detail() const {
    std::ostringstream out;
    out << checked_ << " checks, " << failed_ << " failed";
    for (const auto& n : notes_) out << "\n    " << n;
    return out.str();
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> notes_;
};

// Every point of a sweep, parameters in declared order.
std::vector<Params> grid_points(const TheoremRecord& record, const std::map<std::string, SweepRange>& ranges) {
  std::vector<Params> out{Params{}};
  for (auto name : record.params) {
    const SweepRange r = ranges.at(std::string(name));
    std::vector<Params> next;
    for (const Params& partial : out) {
      for (Int v = r.lo; v <= r.hi; ++v) {
        Params p = partial;
        p[std::string(name)] = v;
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string describe(const TheoremRecord& record, const Params& params) {
  return std::string(record.name) + " at " + format_params(record, params);
}

// L(S(G)) built from the base edge list with the oracle's own routines.
oracle::Dense oracle_line_subdivision(const Graph& base) {
  std::vector<oracle::Pair> subdivided;
  const auto n = static_cast<std::uint32_t>(base.vertex_count());
  std::uint32_t i = 0;
  for (const Edge& e : base.edges()) {
    subdivided.emplace_back(e.u, n + i);
    subdivided.emplace_back(e.v, n + i);
    ++i;
  }
  return oracle::Dense(subdivided.size(), oracle::line_graph_edges(subdivided));
}

struct Sweep {
  TheoremId id;
  std::map<std::string, SweepRange> ranges;
};

const std::vector<Sweep>& f_theorem_grids() {
  static const std::vector<Sweep> grids{
      {TheoremId::kCycleF, {{"n", {3, 25}}}},
      {TheoremId::kStarF, {{"n", {3, 25}}}},
      {TheoremId::kTadpoleF, {{"n", {3, 15}}, {"k", {1, 10}}}},
      {TheoremId::kWheelF, {{"n", {3, 25}}}},
      {TheoremId::kLadderF, {{"n", {2, 25}}}},
      {TheoremId::kGridF, {{"m", {2, 12}}, {"n", {2, 12}}}},
      {TheoremId::kLatticeF, {{"p", {1, 8}}, {"q", {1, 8}}}},
  };
  return grids;
}

Check criterion_f_theorems() {
  Check c;
  for (const Sweep& s : f_theorem_grids()) {
    const TheoremRecord& record = theorem(s.id);
    for (const Params& ps : grid_points(record, s.ranges)) {
      const Graph base = generate_base(record.family, ps);
      const Graph g = generate(theorem_family_spec(record, ps));
      const Int closed = paper_formula(s.id, ps);
      const Int direct = f_index(g);
      const Int independent = oracle_line_subdivision(base).f();
      c.expect(direct == closed && independent == closed,
               describe(record, ps) + ": closed form " + std::to_string(closed) + ", direct " + std::to_string(direct) +
                   ", oracle " + std::to_string(independent));
    }
  }
  return c;
}

Check criterion_star_fco() {
  Check c;
  const TheoremRecord& record = theorem(TheoremId::kStarFCo);
  for (Int n = 3; n <= 25; ++n) {
    const Params ps{{"n", n}};
    const Graph g = generate(theorem_family_spec(record, ps));
    const Int closed = paper_formula(TheoremId::kStarFCo, ps);
    const Int direct = pairwise_coindex(g, IndexKind::kFCo);
    const Int independent = testing::dense(g).coindex(3);
    c.expect(direct == closed && independent == closed,
             describe(record, ps) + ": closed form " + std::to_string(closed) + ", direct " + std::to_string(direct));
  }
  return c;
}

void self_consistency(Check& c, const Graph& g, const std::string& label) {
  const Int pairwise = pairwise_coindex(g, IndexKind::kFCo);
  const Int identity =
      checked::sub(checked::mul(static_cast<Int>(g.vertex_count()) - 1, m1(g)), f_index_edge_form(g));
  c.expect(pairwise == identity, label + ": pairwise F_co " + std::to_string(pairwise) + " vs identity " +
                                     std::to_string(identity));
  c.expect(f_index_vertex_form(g) == f_index_edge_form(g), label + ": vertex-form F differs from edge-form F");
}

Check criterion_self_consistency() {
  Check c;
  for (const TheoremSweep& sweep : default_suite_config().sweeps) {
    const TheoremRecord& record = theorem(sweep.id);
    for (const Params& ps : grid_points(record, sweep.ranges)) {
      self_consistency(c, generate(theorem_family_spec(record, ps)), describe(record, ps));
    }
  }
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = rng() % 61;
    const double density = static_cast<double>(rng() % 101) / 100.0;
    const Graph g = build_graph(n, testing::edges_of(oracle::random_edges(n, density, rng)));
    self_consistency(c, g, "random graph #" + std::to_string(trial));
  }
  return c;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Check criterion_discrepancies(const std::filesystem::path& expectations_path) {
  Check c;
  const std::string text = read_file(expectations_path);
  c.expect(!text.empty(), "expectations file missing or empty: " + expectations_path.string());
  const Report report = run_suite(default_suite_config());
  for (const std::string& d : check_expectations(report, parse_expectations(text))) c.expect(false, d);

  for (const VerdictRecord& r : report.records) {
    const auto at = [&](const char* name) { return r.params.at(name); };
    const std::string label = describe(theorem(r.theorem_id), r.params);
    switch (r.theorem_id) {
      case TheoremId::kCycleFCo:
        c.expect(r.delta == 8 * at("n"), label + ": delta " + std::to_string(r.delta));
        if (at("n") == 4) c.expect(r.paper_value == 192 && r.direct_value == 160, label + ": witness values");
        break;
      case TheoremId::kTadpoleFCo:
        c.expect(r.delta == 5, label + ": delta " + std::to_string(r.delta));
        break;
      case TheoremId::kWheelFCo: {
        const Int n = at("n");
        c.expect(r.delta == -n * (n - 1) * (n - 2) * (n + 2), label + ": delta " + std::to_string(r.delta));
        break;
      }
      case TheoremId::kLadderFCo:
        c.expect(r.delta == 56 * at("n") - 108, label + ": delta " + std::to_string(r.delta));
        if (at("n") == 2) c.expect(r.paper_value == 164 && r.direct_value == 160, label + ": witness values");
        break;
      case TheoremId::kNanotubeF:
        c.expect(r.delta == 2 * at("q"), label + ": delta " + std::to_string(r.delta));
        break;
      case TheoremId::kNanotorusF:
        c.expect(r.delta == 2 * at("p") + 2 * at("q"), label + ": delta " + std::to_string(r.delta));
        break;
      default:
        c.expect(r.delta == 0, label + ": delta " + std::to_string(r.delta));
        break;
    }
  }
  // The two coindex theorems meet at L2 = C4 and disagree there.
  c.expect(paper_formula(TheoremId::kLadderFCo, {{"n", 2}}) != paper_formula(TheoremId::kCycleFCo, {{"n", 4}}),
           "ladder n=2 and cycle n=4 closed forms unexpectedly agree");
  c.expect(generate_base(Family::kLadder, {{"n", 2}}).edge_count() == 4 &&
               degree_multiset(generate_base(Family::kLadder, {{"n", 2}})) ==
                   degree_multiset(generate_base(Family::kCycle, {{"n", 4}})),
           "ladder n=2 is not a 4-cycle");
  return c;
}

Check criterion_tuc_counts() {
  Check c;
  for (Int p = 1; p <= 8; ++p) {
    for (Int q = 1; q <= 8; ++q) {
      const Params ps{{"p", p}, {"q", q}};
      const auto order = static_cast<std::size_t>(4 * p * q);
      struct Expected {
        Family family;
        Int size;
      };
      for (const Expected& e : {Expected{Family::kTucLattice, 6 * p * q - p - q},
                                Expected{Family::kTucNanotube, 6 * p * q - p},
                                Expected{Family::kTucNanotorus, 6 * p * q}}) {
        const Graph g = generate_base(e.family, ps);
        c.expect(g.vertex_count() == order && g.edge_count() == static_cast<std::size_t>(e.size),
                 std::string(family_name(e.family)) + " p=" + std::to_string(p) + ",q=" + std::to_string(q) + ": " +
                     std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) + " edges");
      }
    }
  }
  return c;
}

Check criterion_degree_profiles() {
  Check c;
  for (const Sweep& s : f_theorem_grids()) {
    const TheoremRecord& record = theorem(s.id);
    for (const Params& ps : grid_points(record, s.ranges)) {
      const Graph g = generate(theorem_family_spec(record, ps));
      const DegreeMultiset expected = paper_degree_profile(s.id, ps);
      c.expect(degree_multiset(g) == expected, describe(record, ps) + ": degree multiset differs");
      // Independent count from the oracle's dense construction.
      const auto counts = oracle_line_subdivision(generate_base(record.family, ps)).degree_counts();
      DegreeMultiset::Counts oracle_counts;
      for (auto [d, k] : counts) oracle_counts[static_cast<std::uint64_t>(d)] = static_cast<std::uint64_t>(k);
      c.expect(DegreeMultiset(oracle_counts) == expected, describe(record, ps) + ": oracle degree multiset differs");
    }
  }
  return c;
}

Check criterion_determinism(const std::string& cli, const std::filesystem::path& scratch) {
  Check c;
  std::filesystem::create_directories(scratch);
  for (const char* format : {"csv", "json"}) {
    std::vector<std::string> outputs;
    for (const char* threads : {"1", "1", "4"}) {
      const auto path = scratch / (std::string("report_") + format + "_" + std::to_string(outputs.size()));
      const std::string command = "\"" + cli + "\" verify --format " + format + " --threads " + threads +
                                  " --out \"" + path.string() + "\"";
      const int rc = std::system(command.c_str());
      c.expect(rc == 0, command + " exited with " + std::to_string(rc));
      outputs.push_back(read_file(path));
    }
    c.expect(!outputs[0].empty(), std::string(format) + " report is empty");
    c.expect(outputs[0] == outputs[1], std::string(format) + " reports differ between identical runs");
    c.expect(outputs[0] == outputs[2], std::string(format) + " reports differ between 1 and 4 threads");
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: acceptance_test <ftopo-cli> <expectations-file> <scratch-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::filesystem::path expectations = argv[2];
  const std::filesystem::path scratch = argv[3];

  struct Criterion {
    const char* title;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {"F-index closed forms reproduce on L(S(G))", criterion_f_theorems},
      {"STAR_FCO reproduces by pair enumeration", criterion_star_fco},
      {"F-coindex and F-index self-consistency", criterion_self_consistency},
      {"Discrepancies stable and pinned", [&] { return criterion_discrepancies(expectations); }},
      {"TUC4C8 generator orders and sizes", criterion_tuc_counts},
      {"Degree profiles of non-wrap families", criterion_degree_profiles},
      {"Byte-identical reports across runs and threads", [&] { return criterion_determinism(cli, scratch); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      check = criteria[i].run();
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.ok() ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].title << " ("
              << check.detail() << ")\n";
    if (!check.ok()) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
