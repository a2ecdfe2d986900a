#ifndef POLYZ_TOOLS_CLI_HPP
#define POLYZ_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace polyz::cli {

/// Runs one command. args excludes the program name.
/// Exit codes: 0 success, 1 domain error, 2 usage or parse error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace polyz::cli

#endif // POLYZ_TOOLS_CLI_HPP
