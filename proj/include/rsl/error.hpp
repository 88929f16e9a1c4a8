#pragma once

#include <stdexcept>
#include <string>

namespace rsl {

// Base class for all user-facing failures. CLI maps these to exit code 2;
// anything else escaping to main is treated as an internal error (exit 3).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unknown state, action, or other name lookup failure.
struct LookupError : Error {
    using Error::Error;
};

// A strategy is undefined at a reachable state it must cover.
struct IncompleteStrategyError : Error {
    using Error::Error;
};

// Enumeration domain exceeds the configured cap and sampling is disabled.
struct CapacityError : Error {
    using Error::Error;
};

// Restriction left the requested state outside every surviving component.
struct ComponentError : Error {
    using Error::Error;
};

// A restriction leaves an internal state with no legal move for its owner.
struct DeadEndError : Error {
    using Error::Error;
};

// A generated proposition collides with an existing one.
struct NamingError : Error {
    using Error::Error;
};

// Text input rejected by a parser; carries a source position.
struct ParseError : Error {
    int line = 0;
    int column = 0;

    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}

    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace rsl
