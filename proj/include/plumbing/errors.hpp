#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plumbing {

/// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotATree : Error {
    using Error::Error;
};

struct NotBipartite : Error {
    using Error::Error;
};

struct NoPerfectMatching : Error {
    using Error::Error;
};

struct UnknownVertex : Error {
    using Error::Error;
};

struct WrongColor : Error {
    using Error::Error;
};

struct ZeroFraming : Error {
    using Error::Error;
};

struct EdgesNotOnDirectedPath : Error {
    using Error::Error;
};

struct MismatchedUnderlying : Error {
    using Error::Error;
};

struct InadmissibleFraming : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

/// Syntax error in a tree file; line and column are 1-based.
struct ParseError : Error {
    std::size_t line;
    std::size_t column;

    ParseError(std::size_t line_, std::size_t column_, const std::string& message)
        : Error("parse error at line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": " + message),
          line(line_),
          column(column_) {}
};

} // namespace plumbing
