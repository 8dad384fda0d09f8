#pragma once

#include <stdexcept>
#include <string>

namespace fracml {

/// Invalid argument or parameter outside the operator's domain.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Result not representable (reported threshold lives in the message).
struct OverflowError : std::range_error {
  using std::range_error::range_error;
};

/// Requested tolerance not reached; carries the achieved estimate.
struct AccuracyError : std::runtime_error {
  double achieved;
  AccuracyError(const std::string& what, double achieved_estimate)
      : std::runtime_error(what), achieved(achieved_estimate) {}
};

/// Iterative solver failed to converge; carries the residual norm.
struct SolverError : std::runtime_error {
  double residual;
  SolverError(const std::string& what, double residual_norm)
      : std::runtime_error(what), residual(residual_norm) {}
};

/// Malformed input data (files, series, shapes).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fracml
