#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ckspectra {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownVertex : public Error {
public:
    using Error::Error;
};

/// An exhaustive operation was asked to scan more vertices than the configured limit.
class SizeLimitExceeded : public Error {
public:
    SizeLimitExceeded(std::size_t requested, std::size_t limit)
        : Error("size limit exceeded: " + std::to_string(requested) + " > " + std::to_string(limit)),
          requested_(requested),
          limit_(limit) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t requested_;
    std::size_t limit_;
};

class InvalidPath : public Error {
public:
    using Error::Error;
};

class NotAMaximalTail : public Error {
public:
    using Error::Error;
};

class NotSaturatedHereditary : public Error {
public:
    using Error::Error;
};

class NotAdmissible : public Error {
public:
    using Error::Error;
};

class ConditionKRequired : public Error {
public:
    using Error::Error;
};

/// A checked theorem failed on a concrete input; `counterexample()` describes it.
class VerificationFailure : public Error {
public:
    VerificationFailure(const std::string& what, std::string counterexample)
        : Error(what + ": " + counterexample), counterexample_(std::move(counterexample)) {}

    const std::string& counterexample() const noexcept { return counterexample_; }

private:
    std::string counterexample_;
};

/// Graph-text syntax error. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& expected)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected),
          line_(line),
          column_(column),
          expected_(expected) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& expected() const noexcept { return expected_; }

protected:
    ParseError(std::size_t line, std::size_t column, const std::string& expected, const std::string& message)
        : Error(message), line_(line), column_(column), expected_(expected) {}

private:
    std::size_t line_;
    std::size_t column_;
    std::string expected_;
};

class DuplicateLabel : public ParseError {
public:
    DuplicateLabel(std::size_t line, std::size_t column, const std::string& label)
        : ParseError(line, column, "unique label",
                     std::to_string(line) + ":" + std::to_string(column) + ": duplicate label '" + label + "'") {}
};

class UndeclaredVertex : public ParseError {
public:
    UndeclaredVertex(std::size_t line, std::size_t column, const std::string& name)
        : ParseError(line, column, "declared vertex",
                     std::to_string(line) + ":" + std::to_string(column) + ": undeclared vertex '" + name + "'") {}
};

} // namespace ckspectra
