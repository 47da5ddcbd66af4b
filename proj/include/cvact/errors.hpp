#pragma once

#include <stdexcept>
#include <string>

namespace cvact {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A matrix claimed to be a covariance matrix violates gamma + (i/2) Omega >= 0.
struct BonaFideViolation : Error {
  using Error::Error;
};

/// Operation requires a two-mode covariance matrix.
struct NotTwoModes : Error {
  using Error::Error;
};

/// A local 2x2 block has det < 1/4, i.e. it cannot be a single-mode state.
struct DegenerateBlock : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

/// Noise matrix is not positive semidefinite within tolerance.
struct NotPSD : Error {
  using Error::Error;
};

/// Requested Fock cutoff exceeds the configured memory cap.
struct CutoffTooLarge : Error {
  using Error::Error;
};

struct SeriesNotConverged : Error {
  using Error::Error;
};

/// Dense four-mode representation requested beyond the row cap.
struct DenseTooLarge : Error {
  using Error::Error;
};

/// Separability certificate residual failed the PSD test.
struct CertificateFailed : Error {
  using Error::Error;
};

/// The classical/nonclassical output dichotomy failed numerically.
struct FaithfulnessViolation : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace cvact
