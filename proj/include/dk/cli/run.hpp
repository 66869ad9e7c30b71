#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dk/cli/document.hpp"

namespace dk::cli {

struct JobSpec {
  std::string command;
  Json input = Json::object();
  int max_degree = 4;  // T
  int max_weight = 4;  // W
  std::string format = "json";
  // Command-specific integers; each falls back to a field of the same name in the input.
  std::optional<int> degree;  // homology: highest chain degree reported
  std::optional<int> power;   // connectivity: r
  std::optional<int> m;       // koszul, tor: number of variables
  std::optional<int> sphere;  // kernel-ideal-check: n
  std::optional<int> level;   // kernel-ideal-check: k
  std::optional<int> face;    // kernel-ideal-check: i
};

struct JobResult {
  Json report;
  /// 0, or 1 when the report carries a false verdict.
  int exit_code = 0;
};

const std::vector<std::string>& command_names();

/// Throws ParseError for malformed input and PreconditionError when the
/// input violates a precondition of the command.
JobResult run_job(const JobSpec& job);

/// "json" (pretty, trailing newline) or "table" (aligned plain text).
std::string render(const Json& report, const std::string& format);

}  // namespace dk::cli
