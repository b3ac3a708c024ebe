/*
 * Copyright 2026 The ftopo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * ftopo: graph families, subdivision and line-graph transforms, exact
 * degree-based indices (M1, M2, F and their coindices) and a verifier that
 * checks published closed forms for F(L(S(G))) against direct computation.
 *
 * Conventions:
 *  - Every fallible call returns ftopo_status. On failure the out-parameters
 *    are untouched and ftopo_last_error() describes the problem. The message
 *    is thread-local and valid until the next failing call on that thread.
 *  - Handles are opaque and owned by the caller; release them with the
 *    matching *_free function. Passing NULL to a *_free function is a no-op.
 *  - Strings returned through char** are heap-allocated; release them with
 *    ftopo_string_free.
 *  - Graph handles are immutable and may be shared across threads.
 */

#ifndef FTOPO_FTOPO_H
#define FTOPO_FTOPO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FTOPO_BUILDING_LIBRARY)
#    define FTOPO_API __declspec(dllexport)
#  else
#    define FTOPO_API __declspec(dllimport)
#  endif
#else
#  define FTOPO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ftopo_status {
  FTOPO_OK = 0,
  FTOPO_ERR_INVALID_ARGUMENT = 1, /* NULL handle or pointer */
  FTOPO_ERR_PARSE = 2,            /* malformed spec, edge list or expectations */
  FTOPO_ERR_GRAPH = 3,            /* self-loop, duplicate edge, bad endpoint */
  FTOPO_ERR_INDEX = 4,            /* vertex out of range */
  FTOPO_ERR_DOMAIN = 5,           /* parameters outside the stated domain */
  FTOPO_ERR_LOOKUP = 6,           /* unknown theorem, family, index or format */
  FTOPO_ERR_CONFIG = 7,           /* invalid sweep configuration */
  FTOPO_ERR_CONSISTENCY = 8,      /* two independent computations disagreed */
  FTOPO_ERR_OVERFLOW = 9,         /* exact value exceeds int64 */
  FTOPO_ERR_INTERNAL = 10
} ftopo_status;

typedef enum ftopo_index_kind {
  FTOPO_INDEX_M1 = 0,
  FTOPO_INDEX_M2 = 1,
  FTOPO_INDEX_F = 2,
  FTOPO_INDEX_M1_CO = 3,
  FTOPO_INDEX_M2_CO = 4,
  FTOPO_INDEX_F_CO = 5
} ftopo_index_kind;

typedef enum ftopo_report_format {
  FTOPO_FORMAT_CSV = 0,
  FTOPO_FORMAT_JSON = 1,
  FTOPO_FORMAT_MARKDOWN = 2
} ftopo_report_format;

typedef enum ftopo_verdict_status { FTOPO_MATCH = 0, FTOPO_MISMATCH = 1 } ftopo_verdict_status;

typedef enum ftopo_profile_match {
  FTOPO_PROFILE_YES = 0,
  FTOPO_PROFILE_NO = 1,
  FTOPO_PROFILE_NOT_APPLICABLE = 2
} ftopo_profile_match;

typedef struct ftopo_graph ftopo_graph;
typedef struct ftopo_suite ftopo_suite;
typedef struct ftopo_report ftopo_report;

/* One verifier row. String members point into the owning report. */
typedef struct ftopo_verdict {
  const char* theorem_id;
  const char* params; /* "n=4,k=3" */
  int64_t paper_value;
  int64_t direct_value;
  int64_t delta; /* paper_value - direct_value */
  ftopo_verdict_status status;
  ftopo_profile_match profile_match;
} ftopo_verdict;

FTOPO_API const char* ftopo_version(void);
FTOPO_API const char* ftopo_last_error(void);
FTOPO_API const char* ftopo_status_name(ftopo_status status);
FTOPO_API void ftopo_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

/* edge_pairs holds 2 * edge_count vertex ids (u0, v0, u1, v1, ...). */
FTOPO_API ftopo_status ftopo_graph_build(uint32_t vertex_count, const uint32_t* edge_pairs,
                                         size_t edge_count, ftopo_graph** out);
/* "<family>:<param>=<int>[,...][|<transform>[,...]]" */
FTOPO_API ftopo_status ftopo_graph_from_spec(const char* spec, ftopo_graph** out);
FTOPO_API ftopo_status ftopo_graph_parse_edge_list(const char* text, ftopo_graph** out);
FTOPO_API ftopo_status ftopo_graph_write_edge_list(const ftopo_graph* g, char** out);
FTOPO_API void ftopo_graph_free(ftopo_graph* g);

FTOPO_API size_t ftopo_graph_vertex_count(const ftopo_graph* g);
FTOPO_API size_t ftopo_graph_edge_count(const ftopo_graph* g);
FTOPO_API ftopo_status ftopo_graph_degree(const ftopo_graph* g, uint32_t v, size_t* out);
/* Canonical edge i as (u, v) with u < v. */
FTOPO_API ftopo_status ftopo_graph_edge(const ftopo_graph* g, size_t i, uint32_t* u, uint32_t* v);

FTOPO_API ftopo_status ftopo_graph_subdivide(const ftopo_graph* g, ftopo_graph** out);
FTOPO_API ftopo_status ftopo_graph_line_graph(const ftopo_graph* g, ftopo_graph** out);
FTOPO_API ftopo_status ftopo_graph_complement(const ftopo_graph* g, ftopo_graph** out);

/* ---- indices --------------------------------------------------------- */

FTOPO_API const char* ftopo_index_name(ftopo_index_kind kind);
FTOPO_API ftopo_status ftopo_index_from_name(const char* name, ftopo_index_kind* out);
/* Coindices use pair enumeration up to 2000 vertices, identity forms above. */
FTOPO_API ftopo_status ftopo_graph_index(const ftopo_graph* g, ftopo_index_kind kind,
                                         int64_t* out);

/* ---- closed forms ---------------------------------------------------- */

FTOPO_API size_t ftopo_theorem_count(void);
FTOPO_API const char* ftopo_theorem_id(size_t i); /* NULL when out of range */
/* params: "n=4,k=3" */
FTOPO_API ftopo_status ftopo_paper_formula(const char* theorem_id, const char* params,
                                           int64_t* out);

/* ---- verifier -------------------------------------------------------- */

/* A new suite selects no theorems; ftopo_suite_run then runs all of them
 * on the default grids unless ftopo_suite_add_theorem was called. */
FTOPO_API ftopo_status ftopo_suite_create(ftopo_suite** out);
FTOPO_API void ftopo_suite_free(ftopo_suite* suite);
FTOPO_API ftopo_status ftopo_suite_add_theorem(ftopo_suite* suite, const char* theorem_id);
/* Overrides the default range of `param` for every selected theorem that
 * takes it. Checked against theorem domains when the suite runs. */
FTOPO_API ftopo_status ftopo_suite_set_range(ftopo_suite* suite, const char* param, int64_t lo,
                                             int64_t hi);
/* 0 = hardware concurrency. Does not affect report content. */
FTOPO_API ftopo_status ftopo_suite_set_threads(ftopo_suite* suite, unsigned threads);
/* Written into report metadata; reports carry no timestamp otherwise. */
FTOPO_API ftopo_status ftopo_suite_set_timestamp(ftopo_suite* suite, const char* timestamp);
FTOPO_API ftopo_status ftopo_suite_run(const ftopo_suite* suite, ftopo_report** out);

FTOPO_API void ftopo_report_free(ftopo_report* report);
FTOPO_API size_t ftopo_report_record_count(const ftopo_report* report);
FTOPO_API ftopo_status ftopo_report_record(const ftopo_report* report, size_t i,
                                           ftopo_verdict* out);
FTOPO_API ftopo_status ftopo_report_render(const ftopo_report* report, ftopo_report_format format,
                                           char** out);
FTOPO_API ftopo_status ftopo_report_format_from_name(const char* name, ftopo_report_format* out);
/* Compares every record against "THEOREM_ID MATCH|MISMATCH" lines. On
 * success *deviations holds the count and *details (optional, may be NULL)
 * one line per deviation. */
FTOPO_API ftopo_status ftopo_report_check_expectations(const ftopo_report* report,
                                                       const char* expectations,
                                                       size_t* deviations, char** details);

#ifdef __cplusplus
}
#endif

#endif /* FTOPO_FTOPO_H */
