#pragma once

#include <optional>
#include <string>

namespace qforms {

// Outcome of one exact identity check. On failure, `first_difference` holds
// the smallest exponent (or index n) at which the two sides disagree, when
// that is meaningful for the check.
struct Verdict {
    std::string name;
    bool pass = false;
    std::optional<long> first_difference;
    std::string detail;
};

}  // namespace qforms
