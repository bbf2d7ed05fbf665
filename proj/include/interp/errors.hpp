#pragma once

#include <stdexcept>
#include <string>

namespace interp {

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands that cannot be combined: coefficient rings or truncation
/// orders that do not match, dimensions that disagree.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RingMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A mathematical precondition of an operation is violated (non-unit
/// leading coefficient, nonzero constant term, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An identity that must hold by construction failed. Seeing one of these
/// means a bug, never bad user input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace interp
