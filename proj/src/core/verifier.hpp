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

#ifndef FTOPO_CORE_VERIFIER_HPP
#define FTOPO_CORE_VERIFIER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "checked.hpp"
#include "closed_forms.hpp"
#include "families.hpp"
#include "indices.hpp"

namespace ftopo {

enum class Status { kMatch, kMismatch };
enum class ProfileMatch { kYes, kNo, kNotApplicable };

std::string_view status_name(Status s);               // "MATCH" / "MISMATCH"
std::string_view profile_match_name(ProfileMatch p);  // "yes" / "no" / "not_applicable"

struct VerdictRecord {
  TheoremId theorem_id;
  Params params;
  Int paper_value = 0;
  Int direct_value = 0;
  ProfileMatch profile_match = ProfileMatch::kNotApplicable;
  Status status = Status::kMatch;
  Int delta = 0;  // paper_value - direct_value
  // F_co only: whether pair enumeration ran (and agreed with the identity).
  bool enumerated = false;
};

struct SweepRange {
  Int lo = 0;
  Int hi = 0;
  friend bool operator==(const SweepRange&, const SweepRange&) = default;
};

// Inclusive range per theorem parameter; the grid is their Cartesian product.
struct TheoremSweep {
  TheoremId id;
  std::map<std::string, SweepRange> ranges;
};

struct SuiteConfig {
  std::vector<TheoremSweep> sweeps;
  unsigned threads = 1;  // 0 = hardware concurrency
  std::size_t enumeration_cutoff = kEnumerationCutoff;
  std::optional<std::string> timestamp;  // omitted from reports when unset
};

struct TheoremSummary {
  TheoremId id;
  std::size_t match = 0;
  std::size_t mismatch = 0;
};

struct ReportMetadata {
  std::string toolkit_version;
  std::vector<TheoremSweep> sweeps;  // registry order
  std::size_t enumeration_cutoff = kEnumerationCutoff;
  std::size_t oracle_skipped = 0;  // F_co points above the cutoff
  std::optional<std::string> timestamp;
};

struct Report {
  std::vector<VerdictRecord> records;  // registry order, then parameter values
  std::vector<TheoremSummary> summary;
  ReportMetadata metadata;
};

// Default grid: n and k from the domain minimum to 25, m and n of the grid
// up to 12, p and q up to 8.
TheoremSweep default_sweep(TheoremId id);
SuiteConfig default_suite_config();

// Generates L(S(G)), computes the index directly (cross-checking the two
// independent routes), evaluates the closed form and compares degree
// profiles. Errors are rethrown with the theorem id and parameters prefixed.
VerdictRecord verify_theorem(TheoremId id, const Params& params,
                             std::size_t enumeration_cutoff = kEnumerationCutoff);

// Validates the whole configuration (ConfigError) before evaluating anything.
// Mismatches are data, never errors. Output is identical for any thread count.
Report run_suite(const SuiteConfig& config);

// theorem id -> expected status, from lines "THEOREM_ID MATCH|MISMATCH".
// Blank lines and '#' comments are ignored.
using Expectations = std::map<TheoremId, Status>;
Expectations parse_expectations(std::string_view text);

// One human-readable line per deviation; empty when the report conforms.
// A theorem present in the report but absent from the expectations counts as
// a deviation.
std::vector<std::string> check_expectations(const Report& report, const Expectations& expected);

std::string format_params(const TheoremRecord& record, const Params& params);  // "n=4,k=3"

}  // namespace ftopo

#endif  // FTOPO_CORE_VERIFIER_HPP
