#pragma once

#include <stdexcept>
#include <string>

namespace schwarzlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binary series operation on operands of different truncation orders.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// Composition with an inner series whose constant term is not zero.
class CompositionDomainError : public Error {
 public:
  using Error::Error;
};

/// Reciprocal of a series with vanishing constant term.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// A function generator violates its type invariants.
class InvalidGenerator : public Error {
 public:
  using Error::Error;
};

/// Coefficient index outside the admissible range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Malformed or out-of-domain input (empty families, bad series, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace schwarzlab
