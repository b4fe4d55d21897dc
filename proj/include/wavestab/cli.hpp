#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wavestab::cli {

/// Command-line or configuration mistake; maps to exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses the flat key = value configuration format: one pair per line,
/// '#' starts a comment, blank lines ignored. Throws UsageError for unknown
/// keys or malformed lines, naming the offender.
std::map<std::string, std::string> parse_key_value_file(std::istream& in);

/// The keys accepted in a configuration file.
const std::vector<std::string>& config_file_keys();

/// Full dispatch: parse, run the command, emit the report.
/// Exit status: 0 success, 1 usage/configuration/runtime error, 2 when a
/// validation command (validate-modes, table1) finds a FAIL/discrepancy row.
int run_cli(int argc, const char* const* argv);

}  // namespace wavestab::cli
