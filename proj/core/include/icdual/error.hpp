#pragma once

#include <stdexcept>
#include <string>

namespace icdual {

/// Operand shapes disagree (vector length vs ambient dimension, code vs graph).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates a structural invariant (self-loop, cyclic network, bad rank).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine was asked to run beyond its configured size cap.
class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A document could not be parsed into the declared schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace icdual
