#pragma once

#include <stdexcept>
#include <string>

namespace lvhg {

/// Base of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input fails a model assumption or a config constraint (CLI exit code 2).
struct ValidationError : Error {
  using Error::Error;
};

/// A numerical procedure failed or a diagnostic tripped (CLI exit code 3).
struct NumericalError : Error {
  using Error::Error;
};

struct DegenerateSpectralMeasure : ValidationError {
  using ValidationError::ValidationError;
};
struct AsymmetricMeasure : ValidationError {
  using ValidationError::ValidationError;
};
struct SingularMatrix : ValidationError {
  using ValidationError::ValidationError;
};
struct SingularSigma : ValidationError {
  using ValidationError::ValidationError;
};
struct ConfigError : ValidationError {
  using ValidationError::ValidationError;
};
struct NotCentered : ValidationError {
  using ValidationError::ValidationError;
};
struct HorizonTooShort : ValidationError {
  using ValidationError::ValidationError;
};

struct NumericOverflow : NumericalError {
  using NumericalError::NumericalError;
};
struct NonStationary : NumericalError {
  using NumericalError::NumericalError;
};
struct ReducibleChainEstimate : NumericalError {
  using NumericalError::NumericalError;
};
struct InsufficientDecaySignal : NumericalError {
  using NumericalError::NumericalError;
};
struct SolverDivergence : NumericalError {
  using NumericalError::NumericalError;
};
struct QuadratureUnderResolved : NumericalError {
  using NumericalError::NumericalError;
};
struct QuadratureFailure : NumericalError {
  using NumericalError::NumericalError;
};
struct WindowEmpty : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace lvhg
