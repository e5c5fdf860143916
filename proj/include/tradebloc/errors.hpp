#ifndef TRADEBLOC_ERRORS_HPP
#define TRADEBLOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tradebloc {

// Base class for every model-level failure; the CLI maps these to exit code 2.
struct ModelError : std::runtime_error {
  explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParamsError : ModelError {
  using ModelError::ModelError;
};

// Diagonal nonzero or a negative entry in a tariff profile.
struct InvalidProfileError : ModelError {
  using ModelError::ModelError;
};

// A profile drove some equilibrium import negative.
struct ProhibitiveTariffError : ModelError {
  using ModelError::ModelError;
};

struct InvalidRegimeError : ModelError {
  using ModelError::ModelError;
};

struct InvalidPartitionError : ModelError {
  using ModelError::ModelError;
};

struct IndexError : ModelError {
  using ModelError::ModelError;
};

struct RangeError : ModelError {
  using ModelError::ModelError;
};

struct NoConvergenceError : ModelError {
  using ModelError::ModelError;
};

// Backward induction refuses worlds too large to enumerate.
struct TooLargeError : ModelError {
  using ModelError::ModelError;
};

}  // namespace tradebloc

#endif  // TRADEBLOC_ERRORS_HPP
