#pragma once

#include <stdexcept>
#include <string>

namespace wafomlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands with incompatible (n, S) shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A basis or transform that does not have the required rank.
class RankError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or table that would exceed the configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (net files, direction tables, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (zero LFSR state, u outside (0,1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace wafomlab
