#pragma once

#include <stdexcept>
#include <string>

namespace chmsav {

/// A square-root radicand <g,1>_h + C1 (or <h,1>_h + C2) fell below the
/// guard threshold. The remedy is to raise C1/C2 in the scheme parameters.
class RadicandTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The 2x2 reduced system of the half-step elimination is numerically
/// singular. Does not occur for the time steps exercised by the experiments.
class SingularReducedSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Traveling-wave parameters violate z < m < M < c.
class AdmissibilityViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The traveling-wave integrand became non-real (A - sin^2 t < 0).
class QuadratureFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid or incomplete run configuration. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Time integration aborted; the message carries the failing step index.
/// Maps to CLI exit code 3.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chmsav
