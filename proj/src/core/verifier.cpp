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

#include "verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "errors.hpp"
#include "text.hpp"
#include "version.hpp"

namespace ftopo {
namespace {

template <typename E>
bool rethrow_as(const std::exception_ptr& ep, const std::string& prefix) {
  try {
    std::rethrow_exception(ep);
  } catch (const E& e) {
    throw E(prefix + e.what());
  } catch (...) {
    return false;
  }
}

// Same exception type, message prefixed with `prefix`.
[[noreturn]] void rethrow_with_context(const std::string& prefix) {
  auto ep = std::current_exception();
  rethrow_as<GraphError>(ep, prefix);
  rethrow_as<IndexError>(ep, prefix);
  rethrow_as<DomainError>(ep, prefix);
  rethrow_as<ParseError>(ep, prefix);
  rethrow_as<LookupError>(ep, prefix);
  rethrow_as<ConfigError>(ep, prefix);
  rethrow_as<ConsistencyError>(ep, prefix);
  rethrow_as<OverflowError>(ep, prefix);
  std::rethrow_exception(ep);
}

std::vector<Int> param_key(const TheoremRecord& record, const Params& params) {
  std::vector<Int> key;
  for (auto name : record.params) key.push_back(params.at(std::string(name)));
  return key;
}

void validate_sweep(const TheoremSweep& sweep) {
  const TheoremRecord& record = theorem(sweep.id);
  const std::string where = "sweep for " + std::string(record.name) + ": ";
  for (const auto& [name, range] : sweep.ranges) {
    if (std::find(record.params.begin(), record.params.end(), name) == record.params.end()) {
      throw ConfigError(where + "theorem has no parameter '" + name + "'");
    }
  }
  for (std::size_t i = 0; i < record.params.size(); ++i) {
    const std::string name(record.params[i]);
    auto it = sweep.ranges.find(name);
    if (it == sweep.ranges.end()) throw ConfigError(where + "no range for '" + name + "'");
    const SweepRange& r = it->second;
    if (r.lo > r.hi) {
      throw ConfigError(where + name + " range " + std::to_string(r.lo) + ".." +
                        std::to_string(r.hi) + " is empty");
    }
    if (r.lo < record.minimum[i]) {
      throw ConfigError(where + name + " range starts at " + std::to_string(r.lo) +
                        " but the theorem is stated for " + name + " >= " +
                        std::to_string(record.minimum[i]));
    }
  }
}

std::vector<Params> grid_points(const TheoremSweep& sweep) {
  const TheoremRecord& record = theorem(sweep.id);
  std::vector<Params> points{Params{}};
  for (auto name_view : record.params) {
    const std::string name(name_view);
    const SweepRange& r = sweep.ranges.at(name);
    std::vector<Params> next;
    for (const Params& base : points) {
      for (Int v = r.lo; v <= r.hi; ++v) {
        Params p = base;
        p[name] = v;
        next.push_back(std::move(p));
      }
    }
    points = std::move(next);
  }
  return points;
}

}  // namespace

std::string_view status_name(Status s) { return s == Status::kMatch ? "MATCH" : "MISMATCH"; }

std::string_view profile_match_name(ProfileMatch p) {
  switch (p) {
    case ProfileMatch::kYes:
      return "yes";
    case ProfileMatch::kNo:
      return "no";
    case ProfileMatch::kNotApplicable:
      break;
  }
  return "not_applicable";
}

std::string format_params(const TheoremRecord& record, const Params& params) {
  std::string out;
  for (auto name : record.params) {
    if (!out.empty()) out += ',';
    out += name;
    out += '=';
    out += std::to_string(params.at(std::string(name)));
  }
  return out;
}

TheoremSweep default_sweep(TheoremId id) {
  const TheoremRecord& record = theorem(id);
  TheoremSweep sweep{id, {}};
  for (std::size_t i = 0; i < record.params.size(); ++i) {
    const std::string name(record.params[i]);
    Int hi = 25;
    if (record.family == Family::kGrid) hi = 12;
    if (name == "p" || name == "q") hi = 8;
    sweep.ranges[name] = {record.minimum[i], hi};
  }
  return sweep;
}

SuiteConfig default_suite_config() {
  SuiteConfig config;
  for (const TheoremRecord& record : theorem_registry()) {
    config.sweeps.push_back(default_sweep(record.id));
  }
  return config;
}

VerdictRecord verify_theorem(TheoremId id, const Params& params, std::size_t enumeration_cutoff) {
  const TheoremRecord& record = theorem(id);
  try {
    check_theorem_params(record, params);
    const Graph g = generate(theorem_family_spec(record, params));

    VerdictRecord out{id, params};
    if (record.index == IndexKind::kF) {
      out.direct_value = f_index(g);
    } else {
      const Int identity = f_coindex_via_identity(g);
      if (g.vertex_count() <= enumeration_cutoff) {
        out.direct_value = pairwise_coindex(g, IndexKind::kFCo);
        out.enumerated = true;
        if (out.direct_value != identity) {
          throw ConsistencyError("pairwise F_co " + std::to_string(out.direct_value) +
                                 " disagrees with identity form " + std::to_string(identity));
        }
      } else {
        out.direct_value = identity;
      }
    }
    out.paper_value = record.formula(params);
    out.delta = checked::sub(out.paper_value, out.direct_value);
    out.status = out.delta == 0 ? Status::kMatch : Status::kMismatch;
    out.profile_match = degree_multiset(g) == record.profile(params) ? ProfileMatch::kYes
                                                                      : ProfileMatch::kNo;
    return out;
  } catch (const Error&) {
    rethrow_with_context(std::string(record.name) + " at " + format_params(record, params) + ": ");
  }
}

Report run_suite(const SuiteConfig& config) {
  std::vector<TheoremSweep> sweeps = config.sweeps;
  std::set<TheoremId> seen;
  for (const TheoremSweep& sweep : sweeps) {
    if (!seen.insert(sweep.id).second) {
      throw ConfigError("theorem " + std::string(theorem(sweep.id).name) + " listed twice");
    }
    validate_sweep(sweep);
  }
  std::sort(sweeps.begin(), sweeps.end(),
            [](const TheoremSweep& a, const TheoremSweep& b) { return a.id < b.id; });

  struct Job {
    TheoremId id;
    Params params;
  };
  std::vector<Job> jobs;
  for (const TheoremSweep& sweep : sweeps) {
    for (Params& p : grid_points(sweep)) jobs.push_back({sweep.id, std::move(p)});
  }

  std::vector<VerdictRecord> results(jobs.size());
  std::vector<std::exception_ptr> failures(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = verify_theorem(jobs[i].id, jobs[i].params, config.enumeration_cutoff);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1))));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  // Lowest failing grid point wins, so the error does not depend on scheduling.
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  std::stable_sort(results.begin(), results.end(), [](const VerdictRecord& a, const VerdictRecord& b) {
    if (a.theorem_id != b.theorem_id) return a.theorem_id < b.theorem_id;
    const TheoremRecord& record = theorem(a.theorem_id);
    return param_key(record, a.params) < param_key(record, b.params);
  });

  Report report;
  for (const TheoremSweep& sweep : sweeps) report.summary.push_back({sweep.id});
  for (const VerdictRecord& r : results) {
    auto it = std::find_if(report.summary.begin(), report.summary.end(),
                           [&](const TheoremSummary& s) { return s.id == r.theorem_id; });
    (r.status == Status::kMatch ? it->match : it->mismatch)++;
    if (theorem(r.theorem_id).index == IndexKind::kFCo && !r.enumerated) {
      ++report.metadata.oracle_skipped;
    }
  }
  report.records = std::move(results);
  report.metadata.toolkit_version = std::string(kToolkitVersion);
  report.metadata.sweeps = std::move(sweeps);
  report.metadata.enumeration_cutoff = config.enumeration_cutoff;
  report.metadata.timestamp = config.timestamp;
  return report;
}

Expectations parse_expectations(std::string_view content) {
  Expectations out;
  std::size_t line_no = 0;
  for (std::string_view line : text::split(content, '\n')) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = text::fields(line);
    if (tokens.empty()) continue;
    const std::string where = "expectations line " + std::to_string(line_no) + ": ";
    if (tokens.size() != 2) throw ParseError(where + "expected '<theorem_id> MATCH|MISMATCH'");
    TheoremId id;
    try {
      id = find_theorem(tokens[0]).id;
    } catch (const LookupError& e) {
      throw ParseError(where + e.what());
    }
    Status status;
    if (tokens[1] == "MATCH") {
      status = Status::kMatch;
    } else if (tokens[1] == "MISMATCH") {
      status = Status::kMismatch;
    } else {
      throw ParseError(where + "status must be MATCH or MISMATCH, got '" + std::string(tokens[1]) + "'");
    }
    if (!out.emplace(id, status).second) {
      throw ParseError(where + "duplicate entry for " + std::string(tokens[0]));
    }
  }
  return out;
}

std::vector<std::string> check_expectations(const Report& report, const Expectations& expected) {
  std::vector<std::string> deviations;
  for (const TheoremSummary& s : report.summary) {
    if (!expected.contains(s.id)) {
      deviations.push_back("no expectation for " + std::string(theorem(s.id).name));
    }
  }
  for (const VerdictRecord& r : report.records) {
    auto it = expected.find(r.theorem_id);
    if (it == expected.end() || it->second == r.status) continue;
    const TheoremRecord& record = theorem(r.theorem_id);
    deviations.push_back(std::string(record.name) + " " + format_params(record, r.params) +
                         ": expected " + std::string(status_name(it->second)) + ", got " +
                         std::string(status_name(r.status)) + " (delta " +
                         std::to_string(r.delta) + ")");
  }
  return deviations;
}

}  // namespace ftopo
