#pragma once

#include <stdexcept>
#include <string>

namespace qring {

/// Thrown when a configured work limit (pair queue, branch count, search box)
/// is exhausted.  Distinct from "no result found": callers must not conflate
/// the two.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an enumeration guard (factorial search caps) rejects the input.
class guard_error : public std::invalid_argument {
public:
    explicit guard_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Text-format parse failure with 1-based source position.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line, int column)
        : std::runtime_error("parse error at line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace qring
