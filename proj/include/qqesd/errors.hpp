#pragma once

#include <stdexcept>
#include <string>

namespace qqesd {

// Conformability violations (caller bugs).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parameter outside its physical range, e.g. p outside [0, 1].
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotHermitianError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotDensityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No closed form exists for the requested scenario/parameter combination.
struct UnsupportedModeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_probability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
  }
}

}  // namespace detail
}  // namespace qqesd
