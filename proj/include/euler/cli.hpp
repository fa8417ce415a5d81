#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace euler::cli {

enum ExitCode : int {
    ok = 0,
    verification_failed = 1,
    invalid_parameters = 2,
    precision_failure = 3,
};

/// Runs the command line `euler <args...>` (args excludes the program name).
/// Results go to `out`; failures print one line "error: <kind>: <reason>"
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "k=v,k=v" with integer values.
std::vector<std::pair<std::string, long>> parse_params(const std::string& text);

/// "k=a..b,k=v" ranges in the given order.
std::vector<std::pair<std::string, std::vector<long>>> parse_grid(const std::string& text);

}  // namespace euler::cli
