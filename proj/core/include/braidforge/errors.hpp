#pragma once

#include <stdexcept>
#include <string>

namespace braidforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Signed-integer arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Text input did not conform to a format; carries a 1-based location.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int col)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int column() const { return col_; }

 private:
  int line_;
  int col_;
};

class PresentationError : public Error {
 public:
  using Error::Error;
};

/// Quotient map construction failures: RelatorNotKilled, NotSurjective.
class QuotientError : public Error {
 public:
  using Error::Error;
};

/// A word expected to lie in the kernel subgroup does not.
class KernelError : public Error {
 public:
  using Error::Error;
};

class TietzeError : public Error {
 public:
  using Error::Error;
};

/// Broken internal invariant; the CLI maps this to exit code 3.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace braidforge
