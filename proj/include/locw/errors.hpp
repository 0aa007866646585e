#ifndef LOCW_ERRORS_HPP
#define LOCW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace locw {

// Raised on malformed sentence sources. Carries 1-based position info.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error(message + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A structurally invalid value: arity mismatch, variable out of range,
// duplicate symbol, signature mismatch between a structure and a sentence.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& message)
      : std::runtime_error(message) {}
};

// An operation refused because a documented precondition does not hold
// (non-unary signature on a unary-only question, symbol clash in a
// combinator, missing special witness, ...). CLI maps this to exit code 3.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace locw

#endif  // LOCW_ERRORS_HPP
