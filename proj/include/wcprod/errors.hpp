#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wcprod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph data: bad endpoints, self-loops, non-independent inputs.
class GraphError : public Error {
public:
    using Error::Error;
};

/// A size cap was exceeded (vertex count over 64, exhaustive corpus too large).
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Text input that could not be parsed. `position` is a 0-based offset
/// (byte offset for graph6 and family specs, line number for edge lists).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace wcprod
