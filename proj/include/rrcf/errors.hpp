#pragma once

#include <stdexcept>
#include <string>

namespace rrcf {

/// Argument outside the domain of the operation (q not in (0,1), G_n < 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series, product or continued fraction would exceed the term cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The caller did not supply enough precision (or another precondition).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No real root of a candidate polynomial matches the requested target.
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rrcf
