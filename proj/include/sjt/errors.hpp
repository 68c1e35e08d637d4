#pragma once

#include <stdexcept>
#include <string>

namespace sjt {

/// Operand shapes do not fit the operation.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of a formula (e.g. 0^{-1/2}, Im Omega not > 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A denominator such as det(C Omega + D) vanished to working precision.
class SingularError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a hard resource cap. Carries the best error
/// bound that was certifiable within the cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, double partialBound)
      : std::runtime_error(what), partialBound_(partialBound) {}
  double partialBound() const noexcept { return partialBound_; }

 private:
  double partialBound_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sjt
