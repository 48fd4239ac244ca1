#pragma once

#include <stdexcept>
#include <string>

namespace cyclebound {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated an operation's contract (mismatched tables, bad index, ...).
class UsageError : public Error {
public:
    using Error::Error;
};

/// A denominator or a negatively powered base evaluated to zero.
class EvaluationSingular : public Error {
public:
    using Error::Error;
};

/// A radicand or a fractionally powered base evaluated negative.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition failed (e.g. potential of a non-closed form).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The input is outside what the kernel represents.
class Unsupported : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string &what, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          message_(what), line_(line), column_(column) {}

    const std::string &message() const { return message_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::string message_;
    int line_;
    int column_;
};

} // namespace cyclebound
