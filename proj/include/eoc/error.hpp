#pragma once

#include <stdexcept>
#include <string>

namespace eoc {

// Base of all library errors. The CLI maps the concrete kind to an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed literal or out-of-range argument.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but lies outside the domain of the requested map.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exhaustive work refused because the instance exceeds a size guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace eoc
