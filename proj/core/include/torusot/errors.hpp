#pragma once

#include <stdexcept>
#include <string>

namespace torusot {

/// Base class for all torusot errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: non-finite coordinates, dimension mismatch, empty samples.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// Instance outside an operation's supported range (e.g. brute force with n != m).
class UnsupportedInstanceError : public Error {
 public:
  using Error::Error;
};

/// Not enough data to produce the requested quantity.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Calibration replicate count below the supported minimum.
class CalibrationError : public Error {
 public:
  using Error::Error;
};

/// Bootstrap produced a degenerate (zero-variance) distribution.
class DegenerateBootstrapError : public Error {
 public:
  using Error::Error;
};

/// A user-supplied concentration bound violated its monotonicity contract.
class InvalidBoundError : public Error {
 public:
  using Error::Error;
};

/// File or record level problems: missing columns, unparseable rows,
/// out-of-range angles. Messages carry the offending line when known.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Conditions that indicate a bug rather than bad input (solver
/// non-convergence on a feasible instance, violated postconditions).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace torusot
