#pragma once

#include <stdexcept>
#include <string>

namespace homlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad file syntax, out-of-range endpoint, group axiom failure.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a configured size bound or asks for an unsupported construction.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Operands of different kinds (graph vs group) were combined.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A self-check of the engine failed. Never expected to fire.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace homlab
