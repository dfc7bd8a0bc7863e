#pragma once

#include <stdexcept>
#include <string>

namespace classzeta {

// Raised when an internal consistency check fails (corrupted embedded data,
// inexact division in the Dirichlet formula, identity breakage). Callers
// should treat this as a bug, not as bad input; the CLI maps it to exit 2.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace classzeta
