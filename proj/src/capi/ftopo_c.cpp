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

#include "ftopo/ftopo.h"

#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "edge_list.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "indices.hpp"
#include "report_io.hpp"
#include "text.hpp"
#include "transforms.hpp"
#include "verifier.hpp"
#include "version.hpp"

struct ftopo_graph {
  ftopo::Graph graph;
};

struct ftopo_suite {
  std::vector<ftopo::TheoremId> theorems;
  std::map<std::string, ftopo::SweepRange> overrides;
  unsigned threads = 1;
  std::optional<std::string> timestamp;
};

struct ftopo_report {
  ftopo::Report report;
  std::vector<std::string> params_text;  // parallel to report.records
};

namespace {

thread_local std::string g_last_error;

ftopo_status fail(ftopo_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
ftopo_status guarded(Body&& body) {
  try {
    body();
    return FTOPO_OK;
  } catch (const ftopo::ParseError& e) {
    return fail(FTOPO_ERR_PARSE, e.what());
  } catch (const ftopo::GraphError& e) {
    return fail(FTOPO_ERR_GRAPH, e.what());
  } catch (const ftopo::IndexError& e) {
    return fail(FTOPO_ERR_INDEX, e.what());
  } catch (const ftopo::DomainError& e) {
    return fail(FTOPO_ERR_DOMAIN, e.what());
  } catch (const ftopo::LookupError& e) {
    return fail(FTOPO_ERR_LOOKUP, e.what());
  } catch (const ftopo::ConfigError& e) {
    return fail(FTOPO_ERR_CONFIG, e.what());
  } catch (const ftopo::ConsistencyError& e) {
    return fail(FTOPO_ERR_CONSISTENCY, e.what());
  } catch (const ftopo::OverflowError& e) {
    return fail(FTOPO_ERR_OVERFLOW, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FTOPO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FTOPO_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FTOPO_ERR_INTERNAL, "unknown error");
  }
}

ftopo_status null_argument(const char* what) {
  return fail(FTOPO_ERR_INVALID_ARGUMENT, std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ftopo_status wrap_graph(ftopo::Graph g, ftopo_graph** out) {
  *out = new ftopo_graph{std::move(g)};
  return FTOPO_OK;
}

// "n=4,k=3" -> Params.
ftopo::Params parse_params(std::string_view text) {
  ftopo::Params out;
  if (ftopo::text::trim(text).empty()) return out;
  for (auto item : ftopo::text::split(text, ',')) {
    item = ftopo::text::trim(item);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ftopo::ParseError("expected <param>=<int>, got '" + std::string(item) + "'");
    }
    std::string name(ftopo::text::trim(item.substr(0, eq)));
    std::string value(ftopo::text::trim(item.substr(eq + 1)));
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (value.empty() || used != value.size()) {
      throw ftopo::ParseError("invalid integer '" + value + "' for parameter '" + name + "'");
    }
    out[name] = v;
  }
  return out;
}

}  // namespace

extern "C" {

const char* ftopo_version(void) { return FTOPO_VERSION; }

const char* ftopo_last_error(void) { return g_last_error.c_str(); }

const char* ftopo_status_name(ftopo_status status) {
  switch (status) {
    case FTOPO_OK: return "ok";
    case FTOPO_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FTOPO_ERR_PARSE: return "parse error";
    case FTOPO_ERR_GRAPH: return "graph error";
    case FTOPO_ERR_INDEX: return "index error";
    case FTOPO_ERR_DOMAIN: return "domain error";
    case FTOPO_ERR_LOOKUP: return "lookup error";
    case FTOPO_ERR_CONFIG: return "configuration error";
    case FTOPO_ERR_CONSISTENCY: return "self-consistency failure";
    case FTOPO_ERR_OVERFLOW: return "overflow";
    case FTOPO_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ftopo_string_free(char* s) { std::free(s); }

ftopo_status ftopo_graph_build(uint32_t vertex_count, const uint32_t* edge_pairs,
                               size_t edge_count, ftopo_graph** out) {
  if (out == nullptr) return null_argument("out");
  if (edge_pairs == nullptr && edge_count > 0) return null_argument("edge_pairs");
  return guarded([&] {
    std::vector<ftopo::Edge> edges(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges[i] = {edge_pairs[2 * i], edge_pairs[2 * i + 1]};
    wrap_graph(ftopo::Graph::build(vertex_count, std::move(edges)), out);
  });
}

ftopo_status ftopo_graph_from_spec(const char* spec, ftopo_graph** out) {
  if (spec == nullptr) return null_argument("spec");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { wrap_graph(ftopo::generate(ftopo::parse_family_spec(spec)), out); });
}

ftopo_status ftopo_graph_parse_edge_list(const char* text, ftopo_graph** out) {
  if (text == nullptr) return null_argument("text");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { wrap_graph(ftopo::parse_edge_list(text), out); });
}

ftopo_status ftopo_graph_write_edge_list(const ftopo_graph* g, char** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = copy_string(ftopo::write_edge_list(g->graph)); });
}

void ftopo_graph_free(ftopo_graph* g) { delete g; }

size_t ftopo_graph_vertex_count(const ftopo_graph* g) { return g ? g->graph.vertex_count() : 0; }

size_t ftopo_graph_edge_count(const ftopo_graph* g) { return g ? g->graph.edge_count() : 0; }

ftopo_status ftopo_graph_degree(const ftopo_graph* g, uint32_t v, size_t* out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = g->graph.degree(v); });
}

ftopo_status ftopo_graph_edge(const ftopo_graph* g, size_t i, uint32_t* u, uint32_t* v) {
  if (g == nullptr) return null_argument("graph");
  if (u == nullptr || v == nullptr) return null_argument("u/v");
  if (i >= g->graph.edge_count()) {
    return fail(FTOPO_ERR_INDEX, "edge " + std::to_string(i) + " out of range");
  }
  *u = g->graph.edges()[i].u;
  *v = g->graph.edges()[i].v;
  return FTOPO_OK;
}

ftopo_status ftopo_graph_subdivide(const ftopo_graph* g, ftopo_graph** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { wrap_graph(ftopo::subdivide(g->graph), out); });
}

ftopo_status ftopo_graph_line_graph(const ftopo_graph* g, ftopo_graph** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { wrap_graph(ftopo::line_graph(g->graph), out); });
}

ftopo_status ftopo_graph_complement(const ftopo_graph* g, ftopo_graph** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { wrap_graph(ftopo::complement(g->graph), out); });
}

const char* ftopo_index_name(ftopo_index_kind kind) {
  if (kind < FTOPO_INDEX_M1 || kind > FTOPO_INDEX_F_CO) return nullptr;
  // Names are string literals, hence NUL-terminated.
  return ftopo::index_name(static_cast<ftopo::IndexKind>(kind)).data();
}

ftopo_status ftopo_index_from_name(const char* name, ftopo_index_kind* out) {
  if (name == nullptr) return null_argument("name");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = static_cast<ftopo_index_kind>(ftopo::index_from_name(name)); });
}

ftopo_status ftopo_graph_index(const ftopo_graph* g, ftopo_index_kind kind, int64_t* out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  if (kind < FTOPO_INDEX_M1 || kind > FTOPO_INDEX_F_CO) {
    return fail(FTOPO_ERR_LOOKUP, "unknown index kind " + std::to_string(kind));
  }
  return guarded([&] { *out = ftopo::compute_index(g->graph, static_cast<ftopo::IndexKind>(kind)); });
}

size_t ftopo_theorem_count(void) { return ftopo::theorem_registry().size(); }

const char* ftopo_theorem_id(size_t i) {
  auto registry = ftopo::theorem_registry();
  return i < registry.size() ? registry[i].name.data() : nullptr;
}

ftopo_status ftopo_paper_formula(const char* theorem_id, const char* params, int64_t* out) {
  if (theorem_id == nullptr) return null_argument("theorem_id");
  if (params == nullptr) return null_argument("params");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = ftopo::paper_formula(ftopo::find_theorem(theorem_id).id, parse_params(params));
  });
}

ftopo_status ftopo_suite_create(ftopo_suite** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new ftopo_suite(); });
}

void ftopo_suite_free(ftopo_suite* suite) { delete suite; }

ftopo_status ftopo_suite_add_theorem(ftopo_suite* suite, const char* theorem_id) {
  if (suite == nullptr) return null_argument("suite");
  if (theorem_id == nullptr) return null_argument("theorem_id");
  return guarded([&] {
    auto id = ftopo::find_theorem(theorem_id).id;
    for (auto existing : suite->theorems) {
      if (existing == id) return;
    }
    suite->theorems.push_back(id);
  });
}

ftopo_status ftopo_suite_set_range(ftopo_suite* suite, const char* param, int64_t lo, int64_t hi) {
  if (suite == nullptr) return null_argument("suite");
  if (param == nullptr) return null_argument("param");
  return guarded([&] { suite->overrides[param] = {lo, hi}; });
}

ftopo_status ftopo_suite_set_threads(ftopo_suite* suite, unsigned threads) {
  if (suite == nullptr) return null_argument("suite");
  suite->threads = threads;
  return FTOPO_OK;
}

ftopo_status ftopo_suite_set_timestamp(ftopo_suite* suite, const char* timestamp) {
  if (suite == nullptr) return null_argument("suite");
  return guarded([&] {
    if (timestamp == nullptr) {
      suite->timestamp.reset();
    } else {
      suite->timestamp = timestamp;
    }
  });
}

ftopo_status ftopo_suite_run(const ftopo_suite* suite, ftopo_report** out) {
  if (suite == nullptr) return null_argument("suite");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    ftopo::SuiteConfig config;
    config.threads = suite->threads;
    config.timestamp = suite->timestamp;
    std::vector<ftopo::TheoremId> ids = suite->theorems;
    if (ids.empty()) {
      for (const auto& record : ftopo::theorem_registry()) ids.push_back(record.id);
    }
    for (auto id : ids) {
      ftopo::TheoremSweep sweep = ftopo::default_sweep(id);
      for (auto& [name, range] : sweep.ranges) {
        if (auto it = suite->overrides.find(name); it != suite->overrides.end()) range = it->second;
      }
      config.sweeps.push_back(std::move(sweep));
    }
    for (const auto& [name, range] : suite->overrides) {
      bool used = false;
      for (const auto& sweep : config.sweeps) used = used || sweep.ranges.contains(name);
      if (!used) {
        throw ftopo::ConfigError("no selected theorem takes parameter '" + name + "'");
      }
    }
    auto report = std::make_unique<ftopo_report>();
    report->report = ftopo::run_suite(config);
    for (const auto& r : report->report.records) {
      report->params_text.push_back(ftopo::format_params(ftopo::theorem(r.theorem_id), r.params));
    }
    *out = report.release();
  });
}

void ftopo_report_free(ftopo_report* report) { delete report; }

size_t ftopo_report_record_count(const ftopo_report* report) {
  return report ? report->report.records.size() : 0;
}

ftopo_status ftopo_report_record(const ftopo_report* report, size_t i, ftopo_verdict* out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  if (i >= report->report.records.size()) {
    return fail(FTOPO_ERR_INDEX, "record " + std::to_string(i) + " out of range");
  }
  const auto& r = report->report.records[i];
  out->theorem_id = ftopo::theorem(r.theorem_id).name.data();
  out->params = report->params_text[i].c_str();
  out->paper_value = r.paper_value;
  out->direct_value = r.direct_value;
  out->delta = r.delta;
  out->status = r.status == ftopo::Status::kMatch ? FTOPO_MATCH : FTOPO_MISMATCH;
  out->profile_match = static_cast<ftopo_profile_match>(r.profile_match);
  return FTOPO_OK;
}

ftopo_status ftopo_report_render(const ftopo_report* report, ftopo_report_format format, char** out) {
  if (report == nullptr) return null_argument("report");
  if (out == nullptr) return null_argument("out");
  if (format < FTOPO_FORMAT_CSV || format > FTOPO_FORMAT_MARKDOWN) {
    return fail(FTOPO_ERR_LOOKUP, "unknown report format " + std::to_string(format));
  }
  return guarded([&] {
    *out = copy_string(ftopo::render_report(report->report, static_cast<ftopo::ReportFormat>(format)));
  });
}

ftopo_status ftopo_report_format_from_name(const char* name, ftopo_report_format* out) {
  if (name == nullptr) return null_argument("name");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = static_cast<ftopo_report_format>(ftopo::report_format_from_name(name)); });
}

ftopo_status ftopo_report_check_expectations(const ftopo_report* report, const char* expectations,
                                             size_t* deviations, char** details) {
  if (report == nullptr) return null_argument("report");
  if (expectations == nullptr) return null_argument("expectations");
  if (deviations == nullptr) return null_argument("deviations");
  return guarded([&] {
    auto found = ftopo::check_expectations(report->report, ftopo::parse_expectations(expectations));
    std::string text;
    for (const auto& line : found) text += line + "\n";
    if (details != nullptr) *details = copy_string(text);
    *deviations = found.size();
  });
}

}  // extern "C"
