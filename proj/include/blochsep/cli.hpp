#ifndef BLOCHSEP_CLI_HPP
#define BLOCHSEP_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace blochsep::cli {

/// Run the command-line tool on the given arguments (program name
/// excluded). Returns the process exit status: 0 on success, 1 on
/// numerical/validation/file failures, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blochsep::cli

#endif  // BLOCHSEP_CLI_HPP
