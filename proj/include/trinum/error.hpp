#pragma once

#include <stdexcept>
#include <string>

namespace trinum {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numeral-system base outside [2, 256].
class InvalidBase : public Error {
 public:
  explicit InvalidBase(const std::string& msg) : Error(msg) {}
};

/// Malformed textual input (decimal strings, digit strings, ranges, dynamics specs).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// A digit sequence that violates the positional-notation invariants.
class InvalidDigits : public Error {
 public:
  explicit InvalidDigits(const std::string& msg) : Error(msg) {}
};

/// An operation called outside its domain (empty fit window, zero sample size, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

}  // namespace trinum
