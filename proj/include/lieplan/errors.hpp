#pragma once

#include <stdexcept>
#include <string>

namespace lieplan {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (bad literal, wrong shape, invalid spec).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidSpec : public InputError {
 public:
  using InputError::InputError;
};

/// Well-formed input that violates a mathematical precondition of the
/// requested operation.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Non-symmetric Gram matrix, or a matrix outside sp(2n).
class FormError : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

/// Weight is not supported on the center of the Levi.
class SupportError : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

/// Request exceeds the sizes that explicit enumeration is allowed to handle.
class CapabilityError : public PreconditionViolation {
 public:
  using PreconditionViolation::PreconditionViolation;
};

}  // namespace lieplan
