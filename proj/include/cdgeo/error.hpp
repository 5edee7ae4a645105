#pragma once

#include <stdexcept>
#include <string>

namespace cdgeo {

// Base of every error raised by the library. Messages are stable strings that
// the CLI and the tests match against.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Field arithmetic failures: zero divisor, diverging limit, poles, ...
class ArithmeticError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

// Malformed textual input. line/column are 1-based; line is 0 for single
// expressions that have no line context.
class ParseError : public Error {
public:
    ParseError(std::string message, int line, int column)
        : Error(format("", message, line, column)), message_(std::move(message)), line_(line), column_(column) {}

    // The same error, reported as coming from `file`.
    ParseError(const std::string& file, const ParseError& inner)
        : Error(format(file, inner.message_, inner.line_, inner.column_)),
          message_(inner.message_),
          file_(file),
          line_(inner.line_),
          column_(inner.column_) {}

    const std::string& message() const { return message_; }
    const std::string& file() const { return file_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& file, const std::string& message, int line, int column) {
        std::string where = file;
        if (line > 0) where += (where.empty() ? "" : ", ") + std::string("line ") + std::to_string(line);
        if (column > 0) where += (where.empty() ? "" : ", ") + std::string("column ") + std::to_string(column);
        return where.empty() ? message : where + ": " + message;
    }

    std::string message_;
    std::string file_;
    int line_;
    int column_;
};

// A derived degeneration contradicts a recorded non-degeneration.
class GraphInconsistency : public Error {
public:
    GraphInconsistency(const std::string& source, const std::string& target, const std::string& detail)
        : Error("inconsistency: " + source + " -> " + target + " " + detail), source_(source), target_(target) {}

    const std::string& source() const { return source_; }
    const std::string& target() const { return target_; }

private:
    std::string source_;
    std::string target_;
};

}  // namespace cdgeo
