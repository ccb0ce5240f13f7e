#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace parasoc {

/// Exit codes of the command-line driver.
enum ExitCode : int {
  exit_success = 0,
  exit_no_solution = 1,
  exit_input_error = 2,
  exit_capacity_error = 3,
};

/// Runs one CLI invocation. `args` excludes the program name.
/// Results go to `out` as one JSON object per line; diagnostics go to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                 std::ostream& err);

std::vector<std::string> cli_subcommands();

/// JSON schema (draft-07 subset) describing the result object of a subcommand.
/// Throws InputError for an unknown subcommand.
std::string output_schema(std::string_view subcommand);

}  // namespace parasoc
