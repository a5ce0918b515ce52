#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace laplace2sq {

// Runs one CLI invocation (args excludes the program name). Exit codes:
// 0 success, 1 domain error, 2 usage error, 3 verification mismatch.
// The LAPLACE2SQ_BUDGET environment variable (integer) overrides the default
// oracle scan budget.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace laplace2sq
