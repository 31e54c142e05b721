#pragma once

#include <stdexcept>
#include <string>

namespace logtangent {

// Input fails a geometric precondition (degenerate position, bad index set, ...).
struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

// Two independent routes to the same answer disagreed. Always a bug; callers
// must not swallow this.
struct OracleDisagreement : std::logic_error {
    explicit OracleDisagreement(const std::string& what) : std::logic_error(what) {}
};

}  // namespace logtangent
