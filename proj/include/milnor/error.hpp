#pragma once

#include <stdexcept>
#include <string>

namespace milnor {

/// Malformed arrangement document or table.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (non-essential input, wrong
/// residue class, bad prime, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Enumeration would exceed the configured evaluation budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes to the same quantity disagreed. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace milnor
