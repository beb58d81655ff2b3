// relfix command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "relfix/relfix.h"

namespace {

constexpr int kExitInputError = 2;

int report_error(relfix_status status) {
  std::cerr << "relfix: " << relfix_last_error() << '\n';
  return status == RELFIX_VERDICT_FAILED ? 1 : kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify and solve relational fixed-point problems in b-metric spaces"};
  app.set_version_flag("--version", std::string(relfix_version()));

  std::string command;
  std::string file;
  std::optional<double> tol;
  std::optional<std::string> start;
  std::optional<std::uint64_t> max_iter;
  std::optional<double> s;
  bool json = false;

  app.add_option("command", command, "axioms | verify | solve | certify | report")
      ->required()
      ->check(CLI::IsMember({"axioms", "verify", "solve", "certify", "report"}));
  app.add_option("file", file, "problem file")->required();
  app.add_option("--tol", tol, "tolerance for every verdict and the solver stopping rule")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--start", start, "starting point: a coordinate such as 3, or @ID for a point id");
  app.add_option("--max-iter", max_iter, "iteration cap (default 10 * number of points)")->check(CLI::PositiveNumber);
  app.add_option("--s", s, "override the b-metric coefficient s (>= 1)");
  app.add_flag("--json", json, "emit the structured JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  relfix_problem* problem = nullptr;
  if (const relfix_status st = relfix_problem_load(file.c_str(), &problem); st != RELFIX_OK) {
    return report_error(st == RELFIX_VERDICT_FAILED ? RELFIX_INPUT_ERROR : st);
  }

  relfix_run_options options;
  relfix_run_options_init(&options);
  if (tol) {
    options.has_tol = 1;
    options.tol = *tol;
  }
  if (start) options.start = start->c_str();
  if (max_iter) {
    options.has_max_iter = 1;
    options.max_iter = *max_iter;
  }
  if (s) {
    options.has_s = 1;
    options.s = *s;
  }

  relfix_report* report = nullptr;
  const relfix_status st = relfix_run(problem, command.c_str(), &options, &report);
  relfix_problem_free(problem);
  if (!report) return report_error(st);

  std::cout << (json ? relfix_report_json(report) : relfix_report_text(report));
  if (json) std::cout << '\n';
  const int exit_status = relfix_report_exit_status(report);
  relfix_report_free(report);
  return exit_status;
}
