#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "relfix/io/problem_file.hpp"
#include "json.hpp"

namespace relfix::io {

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr std::string_view kReportSchema = "relfix-report/1";

enum class Command { axioms, verify, solve, certify, report };

std::optional<Command> parse_command(std::string_view name) noexcept;
std::string_view to_string(Command c) noexcept;

/// Command-line overrides; unset fields fall back to the problem file, then
/// to the per-metric defaults.
struct RunOptions {
  std::optional<double> tol;
  std::optional<PointRef> start;
  std::optional<std::size_t> max_iter;
  std::optional<double> s;
};

enum ExitStatus : int { kExitPass = 0, kExitVerdictFailure = 1, kExitInputError = 2 };

struct RunResult {
  nlohmann::ordered_json json;
  std::string text;
  bool passed = false;
  int exit_status = kExitVerdictFailure;
};

/// Runs one command. Module failures that concern the data (orbit leaving the
/// relation, uncertifiable result) become failed verdicts inside the report;
/// bad overrides throw ParseError(semantic).
RunResult run_command(Command command, const LoadedProblem& loaded, const RunOptions& options,
                      std::string_view input_text);

/// 64-bit FNV-1a of the input bytes, as 16 hex digits.
std::string input_digest(std::string_view bytes);

}  // namespace relfix::io
