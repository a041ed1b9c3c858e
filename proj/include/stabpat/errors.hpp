#pragma once

#include <stdexcept>
#include <string>

namespace stabpat {

// An exhaustive enumeration would exceed the caller's word budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A computed value contradicts a value it must equal: a failed postcondition,
// a non-integral division in an integer recurrence, or a cache conflict.
class IntegrityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace stabpat
