#pragma once

// Command dispatch shared by the executable and the CLI tests: parses flags,
// runs the requested pipeline stage, and packages the outcome as one JSON
// document (or human-readable text behind --pretty) plus the process exit
// code: 0 success, 1 computation errors, 2 parse/usage errors.

#include <string>
#include <vector>

#include <json.hpp>

namespace troplift::cli {

struct CommandResult {
  nlohmann::json document;  // the JSON output (empty when text is set)
  std::string text;         // --pretty or --help output
  int exit_code = 0;
};

// args excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace troplift::cli
