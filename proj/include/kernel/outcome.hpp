#pragma once

#include <string>
#include <vector>

namespace kernel {

/// Result of one named residual check.
struct CheckOutcome {
    std::string id;
    std::string anchor;   ///< human-readable statement of the identity
    bool pass = false;
    std::string residual; ///< rendered non-zero residual; empty on pass
};

} // namespace kernel
