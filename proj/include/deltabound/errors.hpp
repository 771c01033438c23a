#pragma once

#include <stdexcept>
#include <string>

namespace deltabound {

/// Precondition violation on a mathematical input (genus < 2, nonpositive systole, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Structurally invalid request: wrong covering kind for an operation, unresolvable inputs.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace deltabound
