#pragma once

#include <stdexcept>

namespace qap {

// Invalid user input: bad arguments, malformed files, inconsistent config.
// The CLI maps this to exit code 2.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Non-finite values or a failed numeric computation. Exit code 3.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Request exceeds a documented implementation limit.
struct capability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qap
