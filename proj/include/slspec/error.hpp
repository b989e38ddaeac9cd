#pragma once

#include <stdexcept>
#include <string>

namespace slspec {

/// Raised when inputs violate a documented precondition (bad boundary
/// conditions, exponents >= 1, vectors that are too short, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure fails to deliver its contract
/// (Cholesky breakdown, eigensolver non-convergence, fit non-convergence).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace slspec
