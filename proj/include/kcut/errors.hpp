#ifndef KCUT_ERRORS_HPP
#define KCUT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kcut {

// Rejected input: bad graph data, bad parameters, violated preconditions.
// The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A solver refused to start because its work estimate exceeds the caller's
// budget. Carries the estimate so callers can fall back to a heuristic.
// The CLI maps this to exit code 3.
struct budget_error : std::runtime_error {
    budget_error(const std::string& what, std::uint64_t estimate_, std::uint64_t budget_)
        : std::runtime_error(what), estimate(estimate_), budget(budget_) {}
    std::uint64_t estimate;
    std::uint64_t budget;
};

// An internal numeric identity failed to hold within tolerance. Seeing this
// means either broken arithmetic or a counterexample to a proved statement.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace kcut

#endif
