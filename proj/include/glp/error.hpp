#pragma once

#include <stdexcept>
#include <string>

namespace glp {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Multiset subtraction with a subtrahend that is not contained in the minuend.
class ContainmentError : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  explicit UnknownVertex(const std::string& label)
      : Error("unknown vertex '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

// Polynomials built over different vertex universes were combined.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

// Checked 64-bit (or 32-bit multiplicity) arithmetic overflowed.  Coefficients
// are machine integers; swapping in a big-integer type would go through
// glp/checked.hpp.
class IntegerOverflow : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotATree : public Error {
 public:
  using Error::Error;
};

// A rewriting step failed to decrease the termination measure.
class NonTermination : public Error {
 public:
  using Error::Error;
};

// A proven identity failed to hold; always an implementation bug.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line), message_(message) {}
  int line() const noexcept { return line_; }
  // Message without the line prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  std::string message_;
};

}  // namespace glp
