#pragma once

#include <stdexcept>
#include <string>

namespace tkk {

/// Base class of every error raised by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or dimensions that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was handed an algebra of the wrong kind (e.g. a Lie algebra
/// where an associative one is required).
class KindError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (scalars, polynomials, spec files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A size guard (`--max-dim`) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure: a construction produced an object that
/// violates its own invariants. Never expected for valid input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace tkk
