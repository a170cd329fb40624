#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gradecheck {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands live in different polynomial rings.
struct RingMismatchError : Error {
  RingMismatchError() : Error("operands belong to different polynomial rings") {}
};

// The caller violated a documented precondition (non-homogeneous generator,
// not an hsop, Cohen-Macaulay verification failed, ...). Maps to exit code 2.
struct PreconditionError : Error {
  using Error::Error;
};

// The Groebner pair queue exceeded the configured budget.
struct BudgetError : Error {
  explicit BudgetError(std::size_t budget)
      : Error("pair budget exceeded (" + std::to_string(budget) +
              " S-pairs); raise --budget to continue"),
        budget(budget) {}
  std::size_t budget;
};

// Input text could not be parsed.
struct ParseError : Error {
  ParseError(const std::string& what, int line, int column)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

// An internal invariant failed; indicates a bug, not a user error.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace gradecheck
