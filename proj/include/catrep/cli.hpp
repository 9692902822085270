#ifndef CATREP_CLI_HPP
#define CATREP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace catrep {

// Runs one CLI command. Exit codes: 0 success, 1 invalid input (with the
// violated axiom and witness on err), 2 internal invariant violation.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace catrep

#endif
