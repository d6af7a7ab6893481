#pragma once

#include <stdexcept>

namespace plumbhf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed graphs, bad parameters, violated preconditions. CLI exit code 1.
struct InputError : Error {
  using Error::Error;
};

// Fixed-width arithmetic left the representable range. CLI exit code 2.
struct OverflowError : Error {
  using Error::Error;
};

// Step budget exhausted before the stopping condition was met. CLI exit code 2.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace plumbhf
