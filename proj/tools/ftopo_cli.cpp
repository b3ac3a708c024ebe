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

// ftopo command-line tool: gen / compute / verify.
//
// Exit codes: 0 success, 1 usage or input error, 2 strict-mode deviation
// from the expectations file, 3 internal self-consistency failure.
//
// Links against the C API only.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ftopo/ftopo.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitStrict = 2;
constexpr int kExitConsistency = 3;

struct GraphDeleter {
  void operator()(ftopo_graph* g) const { ftopo_graph_free(g); }
};
struct SuiteDeleter {
  void operator()(ftopo_suite* s) const { ftopo_suite_free(s); }
};
struct ReportDeleter {
  void operator()(ftopo_report* r) const { ftopo_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { ftopo_string_free(s); }
};
using GraphPtr = std::unique_ptr<ftopo_graph, GraphDeleter>;
using SuitePtr = std::unique_ptr<ftopo_suite, SuiteDeleter>;
using ReportPtr = std::unique_ptr<ftopo_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind to main with a chosen exit code.
struct Failure {
  int code;
  std::string message;
};

void check(ftopo_status status, const std::string& context) {
  if (status == FTOPO_OK) return;
  const int code = status == FTOPO_ERR_CONSISTENCY ? kExitConsistency : kExitUsage;
  throw Failure{code, context + ": " + ftopo_status_name(status) + ": " + ftopo_last_error()};
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Failure{kExitUsage, "cannot write '" + path + "'"};
}

// "A..B" or "A".
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& flag, const std::string& text) {
  auto bad = [&] {
    return Failure{kExitUsage, "--" + flag + ": expected A..B or A, got '" + text + "'"};
  };
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != s.size()) throw bad();
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    auto v = to_int(text);
    return {v, v};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

GraphPtr load_graph(const std::string& input) {
  ftopo_graph* raw = nullptr;
  std::error_code ec;
  if (input == "-" || std::filesystem::is_regular_file(input, ec)) {
    const std::string content = read_file(input);
    check(ftopo_graph_parse_edge_list(content.c_str(), &raw), "reading " + input);
  } else {
    check(ftopo_graph_from_spec(input.c_str(), &raw), "family spec '" + input + "'");
  }
  return GraphPtr(raw);
}

int cmd_gen(const std::string& spec, const std::string& out_path) {
  ftopo_graph* raw = nullptr;
  check(ftopo_graph_from_spec(spec.c_str(), &raw), "family spec '" + spec + "'");
  GraphPtr g(raw);
  char* text = nullptr;
  check(ftopo_graph_write_edge_list(g.get(), &text), "writing edge list");
  StringPtr owned(text);
  write_output(out_path, owned.get());
  return kExitOk;
}

int cmd_compute(const std::string& input, std::vector<std::string> names, const std::string& format) {
  GraphPtr g = load_graph(input);
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    names = {"M1", "M2", "F", "M1_co", "M2_co", "F_co"};
  }
  nlohmann::ordered_json json = nlohmann::ordered_json::object();
  std::string line;
  for (const std::string& name : names) {
    ftopo_index_kind kind;
    check(ftopo_index_from_name(name.c_str(), &kind), "--index");
    std::int64_t value = 0;
    check(ftopo_graph_index(g.get(), kind, &value), "computing " + name);
    json[name] = value;
    if (!line.empty()) line += ' ';
    line += name + "=" + std::to_string(value);
  }
  std::cout << (format == "json" ? json.dump(2) : line) << '\n';
  return kExitOk;
}

struct VerifyOptions {
  std::vector<std::string> theorems;
  std::string format = "md";
  std::string out_path;
  std::string strict_path;
  std::map<std::string, std::string> ranges;
  unsigned threads = 0;
  std::string timestamp;
};

int cmd_verify(const VerifyOptions& opt) {
  ftopo_report_format format;
  check(ftopo_report_format_from_name(opt.format.c_str(), &format), "--format");

  // Read the expectations first: an unreadable file is a configuration error
  // and must not cost a full sweep.
  std::optional<std::string> expectations;
  if (!opt.strict_path.empty()) expectations = read_file(opt.strict_path);

  ftopo_suite* raw_suite = nullptr;
  check(ftopo_suite_create(&raw_suite), "creating suite");
  SuitePtr suite(raw_suite);
  for (const auto& id : opt.theorems) check(ftopo_suite_add_theorem(suite.get(), id.c_str()), "--theorem");
  for (const auto& [param, text] : opt.ranges) {
    auto [lo, hi] = parse_range(param, text);
    check(ftopo_suite_set_range(suite.get(), param.c_str(), lo, hi), "--" + param);
  }
  check(ftopo_suite_set_threads(suite.get(), opt.threads), "--threads");
  if (!opt.timestamp.empty()) {
    check(ftopo_suite_set_timestamp(suite.get(), opt.timestamp.c_str()), "--timestamp");
  }

  ftopo_report* raw_report = nullptr;
  check(ftopo_suite_run(suite.get(), &raw_report), "verify");
  ReportPtr report(raw_report);

  char* rendered = nullptr;
  check(ftopo_report_render(report.get(), format, &rendered), "rendering report");
  StringPtr owned(rendered);
  write_output(opt.out_path, owned.get());

  if (expectations) {
    std::size_t deviations = 0;
    char* details = nullptr;
    check(ftopo_report_check_expectations(report.get(), expectations->c_str(), &deviations, &details),
          "expectations file " + opt.strict_path);
    StringPtr owned_details(details);
    if (deviations > 0) {
      std::cerr << "strict mode: " << deviations << " deviation(s) from " << opt.strict_path << '\n'
                << owned_details.get();
      return kExitStrict;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph families, degree-based indices and closed-form verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ftopo_version()));

  std::string gen_spec, gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a family graph as an edge list");
  gen->add_option("spec", gen_spec, "Family spec, e.g. 'tadpole:n=4,k=3|subdivide,line_graph'")->required();
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  std::string compute_input, compute_format = "text";
  std::vector<std::string> compute_indices;
  auto* compute = app.add_subcommand("compute", "Compute indices of a graph");
  compute->add_option("input", compute_input, "Edge-list file, '-' for stdin, or a family spec")->required();
  compute->add_option("--index", compute_indices, "M1, M2, F, M1_co, M2_co, F_co or all (repeatable)");
  compute->add_option("--format", compute_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Check the closed forms against direct computation");
  verify->add_option("--theorem", verify_opt.theorems, "Theorem id filter (repeatable)");
  verify->add_option("--format", verify_opt.format, "csv, json or md");
  verify->add_option("--out", verify_opt.out_path, "Report path (default stdout)");
  verify->add_option("--strict", verify_opt.strict_path, "Expectations file; deviations exit with 2");
  for (const char* p : {"n", "k", "m", "p", "q"}) {
    verify->add_option_function<std::string>(
        std::string("--") + p, [&verify_opt, p](const std::string& v) { verify_opt.ranges[p] = v; },
        std::string("Range A..B for parameter ") + p);
  }
  verify->add_option("--threads", verify_opt.threads, "Worker threads, 0 = hardware concurrency");
  verify->add_option("--timestamp", verify_opt.timestamp, "Timestamp recorded in report metadata");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_spec, gen_out);
    if (*compute) return cmd_compute(compute_input, compute_indices, compute_format);
    if (*verify) return cmd_verify(verify_opt);
  } catch (const Failure& f) {
    std::cerr << "ftopo: " << f.message << '\n';
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "ftopo: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
