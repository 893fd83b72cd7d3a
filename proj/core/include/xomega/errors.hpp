#pragma once

#include <stdexcept>
#include <string>

namespace xomega {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (omega words, group words, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An exact integer result does not fit the 62-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure in the level search; indicates a bug.
class IterationCapExceeded : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search exceeded its configured budget.
class ExplosionGuard : public Error {
 public:
  using Error::Error;
};

/// A window does not contain the full ball that was requested.
class IncompleteBall : public Error {
 public:
  using Error::Error;
};

/// Raised for eventually constant ω, whose graph has a unique loop vertex.
class NotDenseHolonomy : public Error {
 public:
  using Error::Error;
};

/// A vertex of an orbital ball is not of the form a^m(ω).
class NotInAOrbit : public Error {
 public:
  using Error::Error;
};

}  // namespace xomega
