#pragma once

#include <stdexcept>
#include <string>

namespace twoloop {

// A precondition of a library operation was violated (bad matrix, zero
// divisor, non-integral input where integers are required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual input. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// An internal consistency check failed. Seeing one of these means a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace twoloop
