#pragma once

#include <stdexcept>
#include <string>

namespace rcg {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed edge-list or coloring document. `line` is 1-based, 0 if unknown.
struct ParseError : Error {
    int line = 0;
    ParseError(const std::string& what, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
          line(line_no) {}
};

// A precondition on the input graph or parameters does not hold.
struct InvalidInput : Error {
    using Error::Error;
};

// The input is structurally fine but too large for an exhaustive search.
struct SearchLimit : Error {
    using Error::Error;
};

// An internal invariant failed; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace rcg
