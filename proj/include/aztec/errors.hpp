#pragma once

#include <stdexcept>
#include <string>

namespace aztec {

/// Base class for all library failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A tiling or field was passed where a valid one is required.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The four arrows around an interior node form none of the six legal patterns.
class InvalidPattern : public Error {
 public:
  using Error::Error;
};

class NotInteriorNode : public Error {
 public:
  using Error::Error;
};

class MixedOrientation : public Error {
 public:
  using Error::Error;
};

/// Decomposition produced a component that is neither 1×2 nor a repelling 2×2.
class MalformedComponent : public Error {
 public:
  using Error::Error;
};

class ChoiceLengthMismatch : public Error {
 public:
  using Error::Error;
};

/// A request exceeds the size for which exhaustive work is permitted.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace aztec
