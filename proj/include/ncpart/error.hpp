#pragma once

#include <stdexcept>
#include <string>

namespace ncpart {

/// Input does not satisfy the invariants of the structure it claims to be.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Size guard refused a computation (combinatorial explosion or runtime).
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Numeric solver did not converge; `what()` carries the iteration trace.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computation routes disagreed. Indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ncpart
