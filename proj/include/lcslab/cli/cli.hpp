#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcslab::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitResource = 3,
  kExitFormat = 4,
};

/// Runs the command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with arguments after the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "7", "2..12", "50..500:50", or "16,17,100".
std::vector<std::size_t> parse_size_list(const std::string& text);

}  // namespace lcslab::cli
