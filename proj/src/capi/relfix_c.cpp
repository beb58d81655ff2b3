#include "relfix/relfix.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "relfix/io/commands.hpp"

struct relfix_problem {
  std::string text;
  relfix::io::LoadedProblem loaded;
};

struct relfix_report {
  std::string json;
  std::string text;
  bool passed = false;
  int exit_status = 1;
};

namespace {

thread_local std::string last_error;
thread_local int last_error_line = 0;

relfix_status fail(relfix_status status, std::string message, int line = 0) {
  last_error = std::move(message);
  last_error_line = line;
  return status;
}

relfix_status status_for(const relfix::Error& e) {
  switch (e.kind()) {
    case relfix::ErrorKind::syntax:
    case relfix::ErrorKind::semantic:
    case relfix::ErrorKind::unknown_point:
      return RELFIX_INPUT_ERROR;
    case relfix::ErrorKind::invalid_argument:
      return RELFIX_INVALID_ARGUMENT;
    case relfix::ErrorKind::solver:
    case relfix::ErrorKind::certificate:
      return RELFIX_VERDICT_FAILED;
  }
  return RELFIX_INTERNAL_ERROR;
}

template <typename F>
relfix_status guarded(F&& body) {
  try {
    last_error.clear();
    last_error_line = 0;
    return body();
  } catch (const relfix::io::ParseError& e) {
    return fail(status_for(e), e.what(), e.line());
  } catch (const relfix::Error& e) {
    return fail(status_for(e), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RELFIX_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(RELFIX_INTERNAL_ERROR, e.what());
  }
}

}  // namespace

extern "C" {

const char* relfix_version(void) { return relfix::io::kToolVersion.data(); }

const char* relfix_last_error(void) { return last_error.c_str(); }

int relfix_last_error_line(void) { return last_error_line; }

void relfix_run_options_init(relfix_run_options* options) {
  if (options) *options = relfix_run_options{0, 0.0, nullptr, 0, 0, 0, 1.0};
}

relfix_status relfix_problem_parse(const char* text, size_t length, relfix_problem** out) {
  if (!out || (!text && length)) return fail(RELFIX_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::string source(text ? text : "", length);
    auto loaded = relfix::io::load_problem(source);
    *out = new relfix_problem{std::move(source), std::move(loaded)};
    return RELFIX_OK;
  });
}

relfix_status relfix_problem_load(const char* path, relfix_problem** out) {
  if (!path || !out) return fail(RELFIX_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(RELFIX_IO_ERROR, std::string("cannot open ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const relfix_status st = relfix_problem_parse(text.data(), text.size(), out);
  if (st != RELFIX_OK) last_error = std::string(path) + ": " + last_error;
  return st;
}

void relfix_problem_free(relfix_problem* problem) { delete problem; }

size_t relfix_problem_point_count(const relfix_problem* problem) {
  return problem ? problem->loaded.problem.space.size() : 0;
}

relfix_status relfix_problem_coordinate(const relfix_problem* problem, size_t id, double* out) {
  if (!problem || !out) return fail(RELFIX_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = problem->loaded.problem.space.coordinate(relfix::point_id(id));
    return RELFIX_OK;
  });
}

relfix_status relfix_problem_distance(const relfix_problem* problem, size_t a, size_t b, double* out) {
  if (!problem || !out) return fail(RELFIX_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = problem->loaded.problem.space.distance(relfix::point_id(a), relfix::point_id(b));
    return RELFIX_OK;
  });
}

relfix_status relfix_problem_serialize(const relfix_problem* problem, char** out) {
  if (!problem || !out) return fail(RELFIX_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const std::string text = relfix::io::serialize_problem(problem->loaded.file);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
    return RELFIX_OK;
  });
}

void relfix_string_free(char* text) { std::free(text); }

relfix_status relfix_run(const relfix_problem* problem, const char* command, const relfix_run_options* options,
                         relfix_report** out) {
  if (!problem || !command || !out) return fail(RELFIX_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  const auto cmd = relfix::io::parse_command(command);
  if (!cmd) {
    return fail(RELFIX_INPUT_ERROR,
                std::string("unknown command '") + command + "' (axioms, verify, solve, certify, report)");
  }
  relfix::io::RunOptions run;
  if (options) {
    if (options->has_tol) run.tol = options->tol;
    if (options->has_max_iter) {
      if (options->max_iter == 0) return fail(RELFIX_INPUT_ERROR, "max-iter must be positive");
      run.max_iter = static_cast<std::size_t>(options->max_iter);
    }
    if (options->has_s) run.s = options->s;
    if (options->start) {
      run.start = relfix::io::parse_point_ref(options->start);
      if (!run.start) return fail(RELFIX_INPUT_ERROR, std::string("bad point reference '") + options->start + "'");
    }
  }
  return guarded([&] {
    const auto result = relfix::io::run_command(*cmd, problem->loaded, run, problem->text);
    auto report = std::make_unique<relfix_report>();
    report->json = result.json.dump(2);
    report->text = result.text;
    report->passed = result.passed;
    report->exit_status = result.exit_status;
    *out = report.release();
    return result.passed ? RELFIX_OK : RELFIX_VERDICT_FAILED;
  });
}

const char* relfix_report_json(const relfix_report* report) { return report ? report->json.c_str() : ""; }

const char* relfix_report_text(const relfix_report* report) { return report ? report->text.c_str() : ""; }

int relfix_report_passed(const relfix_report* report) { return report && report->passed ? 1 : 0; }

int relfix_report_exit_status(const relfix_report* report) { return report ? report->exit_status : RELFIX_INPUT_ERROR; }

void relfix_report_free(relfix_report* report) { delete report; }

relfix_status relfix_b_simulation_bound(double t, double s_arg, double s_coeff, double* out) {
  if (!out) return fail(RELFIX_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = relfix::check_b_simulation_inequality(t, s_arg, s_coeff).value;
    return RELFIX_OK;
  });
}

}  // extern "C"
