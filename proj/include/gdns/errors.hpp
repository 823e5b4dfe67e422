#pragma once

#include <stdexcept>
#include <string>

namespace gdns {

// Bad configuration or precondition on user-facing input (CLI exit 1).
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Floating-point trouble detected at runtime: NaN/Inf in a state update,
// or a Gevrey exponent that would overflow (CLI exit 2).
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File-format or filesystem problem.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gdns
