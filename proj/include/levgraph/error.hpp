#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace levgraph {

/// Base class for recoverable domain errors (bad input, unknown ids).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph text. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(format(message, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        if (line == 0) return message;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
};

class UnknownNodeError : public Error {
public:
    explicit UnknownNodeError(std::string node)
        : Error("unknown node \"" + node + "\""), node_(std::move(node)) {}

    const std::string& node() const noexcept { return node_; }

private:
    std::string node_;
};

/// Raised when a graph handed to an operation does not satisfy its invariants.
class InvalidGraphError : public Error {
public:
    using Error::Error;
};

/// Raised when a leveled graph does not correspond to the base graph it is paired with.
class ProvenanceMismatchError : public Error {
public:
    using Error::Error;
};

/// Internal consistency failure. Seeing one of these means a bug in this library.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace levgraph
