#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kgraph/algebra.hpp"
#include "kgraph/boundary.hpp"

namespace kgraph::cli {

enum class Format { json, text, dot };

struct RunConfig {
  std::string command;
  std::string instance;
  Mode mode = Mode::exact();
  int samples = 100;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = kDefaultSeed;
  Format format = Format::json;
  std::string out;

  // Command arguments.
  std::optional<std::string> degree;  ///< paths
  std::string lambda;                 ///< lambda-min
  std::string mu;                     ///< lambda-min
  std::string vertex;                 ///< exhaustive
  std::optional<std::vector<std::string>> set;  ///< exhaustive
};

struct CommandResult {
  int exit_code{};
  std::string output;  ///< rendered report, newline-terminated
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

CommandResult cmd_validate(const RunConfig& config);
CommandResult cmd_paths(const RunConfig& config);
CommandResult cmd_lambda_min(const RunConfig& config);
CommandResult cmd_exhaustive(const RunConfig& config);
CommandResult cmd_boundary(const RunConfig& config);
CommandResult cmd_groupoid(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_export(const RunConfig& config);

/// Dispatches on config.command. Library errors become exit code 2 with the message in
/// `output`.
CommandResult run(const RunConfig& config);

/// Full command line: parses argv, runs, writes the report to `out` (or --out) and
/// errors to `err`. Returns the exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kgraph::cli
