#pragma once

#include <stdexcept>

namespace lexleast {

// Greedy extension over a finite alphabet hit a dead end: no letter extends
// the current word without completing a forbidden repetition.
class NoExtensionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A materialization would exceed the configured letter budget.
class BudgetExceededError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// fixed_point_stream seed c where m(c) is not of the form c x with x nonempty.
class NotProlongableError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lexleast
