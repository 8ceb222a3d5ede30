#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace borel {

// Base for every error the library raises. Callers that only care about
// "something went wrong with this input" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in polynomial rings with different variable counts.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// A documented precondition was violated by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Exponent arithmetic left the representable range.
class ExponentOverflow : public Error {
 public:
  using Error::Error;
};

class ZeroModule : public Error {
 public:
  using Error::Error;
};

class NotBorelType : public Error {
 public:
  using Error::Error;
};

class NotArtinian : public Error {
 public:
  using Error::Error;
};

// A desk-scale size guard (oracle box, degree ceiling) was exceeded.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

// No monomial in the witness box realizes the wanted prime.
class WitnessExhausted : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree by theory disagreed. Always an implementation
// defect, never a property of the input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace borel
