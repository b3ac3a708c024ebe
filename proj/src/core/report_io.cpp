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

#include "report_io.hpp"

#include <sstream>

#include "errors.hpp"
#include "json.hpp"

namespace ftopo {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kCsvParams[] = {"n", "k", "m", "p", "q"};

Json params_json(const TheoremRecord& record, const Params& params) {
  Json out = Json::object();
  for (auto name : record.params) out[std::string(name)] = params.at(std::string(name));
  return out;
}

}  // namespace

ReportFormat report_format_from_name(std::string_view name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  if (name == "md" || name == "markdown") return ReportFormat::kMarkdown;
  throw LookupError("unknown report format '" + std::string(name) + "' (expected csv, json or md)");
}

std::string report_to_csv(const Report& report) {
  std::ostringstream out;
  out << "theorem_id";
  for (auto p : kCsvParams) out << ',' << p;
  out << ",paper_value,direct_value,delta,status,profile_match\n";
  for (const VerdictRecord& r : report.records) {
    out << theorem(r.theorem_id).name;
    for (auto p : kCsvParams) {
      out << ',';
      if (auto it = r.params.find(std::string(p)); it != r.params.end()) out << it->second;
    }
    out << ',' << r.paper_value << ',' << r.direct_value << ',' << r.delta << ','
        << status_name(r.status) << ',' << profile_match_name(r.profile_match) << '\n';
  }
  return out.str();
}

std::string report_to_json(const Report& report) {
  Json meta = Json::object();
  meta["toolkit_version"] = report.metadata.toolkit_version;
  Json sweeps = Json::object();
  for (const TheoremSweep& sweep : report.metadata.sweeps) {
    const TheoremRecord& record = theorem(sweep.id);
    Json ranges = Json::object();
    for (auto name : record.params) {
      const SweepRange& r = sweep.ranges.at(std::string(name));
      ranges[std::string(name)] = Json::array({r.lo, r.hi});
    }
    sweeps[std::string(record.name)] = std::move(ranges);
  }
  meta["sweeps"] = std::move(sweeps);
  meta["enumeration_cutoff"] = report.metadata.enumeration_cutoff;
  meta["oracle_skipped"] = report.metadata.oracle_skipped;
  if (report.metadata.timestamp) meta["timestamp"] = *report.metadata.timestamp;

  Json summary = Json::array();
  for (const TheoremSummary& s : report.summary) {
    summary.push_back({{"theorem_id", theorem(s.id).name}, {"MATCH", s.match}, {"MISMATCH", s.mismatch}});
  }

  Json records = Json::array();
  for (const VerdictRecord& r : report.records) {
    const TheoremRecord& record = theorem(r.theorem_id);
    records.push_back({
        {"theorem_id", record.name},
        {"params", params_json(record, r.params)},
        {"paper_value", r.paper_value},
        {"direct_value", r.direct_value},
        {"profile_match", profile_match_name(r.profile_match)},
        {"status", status_name(r.status)},
        {"delta", r.delta},
    });
  }

  Json doc = Json::object();
  doc["metadata"] = std::move(meta);
  doc["summary"] = std::move(summary);
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

std::string report_to_markdown(const Report& report) {
  std::ostringstream out;
  out << "# F-index / F-coindex conformance report\n\n";
  out << "- toolkit version: " << report.metadata.toolkit_version << '\n';
  out << "- enumeration cutoff: " << report.metadata.enumeration_cutoff << " vertices\n";
  out << "- coindex points without enumeration oracle: " << report.metadata.oracle_skipped << '\n';
  if (report.metadata.timestamp) out << "- generated: " << *report.metadata.timestamp << '\n';

  out << "\n## Summary\n\n";
  out << "| theorem_id | closed form | grid | MATCH | MISMATCH |\n";
  out << "|---|---|---|---:|---:|\n";
  for (const TheoremSummary& s : report.summary) {
    const TheoremRecord& record = theorem(s.id);
    std::string grid;
    for (const TheoremSweep& sweep : report.metadata.sweeps) {
      if (sweep.id != s.id) continue;
      for (auto name : record.params) {
        const SweepRange& r = sweep.ranges.at(std::string(name));
        if (!grid.empty()) grid += ", ";
        grid += std::string(name) + "=" + std::to_string(r.lo) + ".." + std::to_string(r.hi);
      }
    }
    out << "| " << record.name << " | `" << record.formula_text << "` | " << grid << " | "
        << s.match << " | " << s.mismatch << " |\n";
  }

  out << "\n## Records\n\n";
  out << "| theorem_id | params | paper_value | direct_value | delta | status | profile_match |\n";
  out << "|---|---|---:|---:|---:|---|---|\n";
  for (const VerdictRecord& r : report.records) {
    const TheoremRecord& record = theorem(r.theorem_id);
    out << "| " << record.name << " | " << format_params(record, r.params) << " | "
        << r.paper_value << " | " << r.direct_value << " | " << r.delta << " | "
        << status_name(r.status) << " | " << profile_match_name(r.profile_match) << " |\n";
  }
  return out.str();
}

std::string render_report(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv:
      return report_to_csv(report);
    case ReportFormat::kJson:
      return report_to_json(report);
    case ReportFormat::kMarkdown:
      return report_to_markdown(report);
  }
  throw LookupError("unhandled report format");
}

}  // namespace ftopo
