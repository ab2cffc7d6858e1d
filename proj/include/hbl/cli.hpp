#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbl {

// Runs one CLI invocation.  Exit codes: 0 success, 2 parse/usage error,
// 3 budget exceeded, 4 internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbl
