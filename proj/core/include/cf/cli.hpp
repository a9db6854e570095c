#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cf::cli {

// Runs one CLI invocation. args exclude the program name ("residue", "--q",
// "7", ...). Documents go to out, diagnostics to err. Returns the process
// exit status: 0 success, 1 domain failure (including no_solution and failed
// verification), 2 usage or schema problem, 3 resource cap.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cf::cli
