#pragma once

#include <stdexcept>
#include <string>

namespace scherk {

// Parameters outside the admissible region or violating an operation's
// precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Well-posed input that lands on a degenerate configuration (coincident
// vertices, vanishing determinant, ...).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation at a pole of a fractional-linear map.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The zero locator spent its Newton budget without converging.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scherk
