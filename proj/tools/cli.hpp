#ifndef PCONCAVE_TOOLS_CLI_HPP
#define PCONCAVE_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace pconcave::cli {

/// Runs one invocation. args excludes the program name. Reports go to out,
/// errors to err as a JSON object; the return value is the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pconcave::cli

#endif  // PCONCAVE_TOOLS_CLI_HPP
