#pragma once

#include <stdexcept>
#include <string>

namespace galperin {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument outside the region where an approximation is valid.
class ValidityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical result could not be certified within the precision budget.
class IndeterminateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested accuracy not achievable by a special-function evaluation.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A guaranteed property of the dynamics was violated (a bug, not bad input).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace galperin
