#ifndef GIRA_CLI_HPP
#define GIRA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gira {

/// Entry point behind the gira binary; also called directly by the CLI
/// tests. Exit codes: 0 = pass / found as requested, 1 = fail or
/// counterexample, 2 = usage or input error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gira

#endif
