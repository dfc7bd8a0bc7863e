#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace classzeta {

// Runs one CLI invocation. args excludes the program name. Data goes to out,
// diagnostics to err. Returns 0 on success, 1 on usage error, 2 on internal
// invariant violation. Verification subcommands exit 0 even when the model's
// claims are violated by data; violations are findings, not failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace classzeta
