#pragma once

#include <stdexcept>
#include <string>

namespace sympair {

/// Operand shapes are incompatible (e.g. a.cols != b.rows).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input lies outside an operation's domain (non-skew input to a
/// Pfaffian, a word of the wrong pair kind, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check failed. Always a bug upstream.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sympair
