#pragma once

#include <stdexcept>
#include <string>

namespace pathlink {

// Bad arguments or inadmissible parameters (CLI exit code 3).
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file (CLI exit code 3, with line number when known).
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_number(line) {}
    int line_number;
};

// A violated internal invariant: a construction produced something the
// theory says cannot happen. Always a bug, never a user error.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

// Admissible pair (shape, host) that has no catalog entry.
struct NotCatalogedError : std::runtime_error {
    explicit NotCatalogedError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pathlink
