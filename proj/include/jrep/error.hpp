#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jrep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed profile or X3C text. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured size cap.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Perfect representation is only defined when k divides n.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace jrep
