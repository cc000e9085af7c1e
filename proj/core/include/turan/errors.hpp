#pragma once

#include <stdexcept>

namespace turan {

// Malformed argument values or input files.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A documented operation precondition failed; the message names a witness.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Work exceeded a configured budget where truncation is not a valid result.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A 4-cycle anchor was requested on a C4-free graph.
struct NoAnchorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace turan
