#pragma once

#include <stdexcept>
#include <string>

namespace steklov {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file or document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: non-finite data, lost definiteness, no convergence.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument does not hold.
class ParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace steklov
