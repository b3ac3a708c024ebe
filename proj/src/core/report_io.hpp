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

// Report serializations. All three are pure functions of the Report, so
// equal reports always serialize to identical bytes.
//
// CSV columns: theorem_id,n,k,m,p,q,paper_value,direct_value,delta,status,
// profile_match. Parameters a theorem does not take are left empty.
//
// JSON: {"metadata": {...}, "summary": [...], "records": [...]}; record keys
// are the VerdictRecord field names.

#ifndef FTOPO_CORE_REPORT_IO_HPP
#define FTOPO_CORE_REPORT_IO_HPP

#include <string>
#include <string_view>

#include "verifier.hpp"

namespace ftopo {

enum class ReportFormat { kCsv, kJson, kMarkdown };

ReportFormat report_format_from_name(std::string_view name);  // csv, json, md

std::string report_to_csv(const Report& report);
std::string report_to_json(const Report& report);
std::string report_to_markdown(const Report& report);
std::string render_report(const Report& report, ReportFormat format);

}  // namespace ftopo

#endif  // FTOPO_CORE_REPORT_IO_HPP
