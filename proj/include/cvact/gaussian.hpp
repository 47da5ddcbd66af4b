#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "cvact/covariance.hpp"

namespace cvact {

/// Gaussian state of the unmeasured modes after a Gaussian measurement.
/// The CM sigma is outcome-independent; only the mean depends on the outcome.
struct ConditionalGaussianState {
  CovarianceMatrix cm;
  Vector mean;
};

/// State of the remaining modes after measuring `measured_modes` with a
/// Gaussian POVM of CM meas_cm and outcome vector k:
///   sigma = B - C^T (A + gamma_m)^-1 C,   d_k = C^T (A + gamma_m)^-1 k,
/// with A, B, C the blocks of the CM w.r.t. the measured|unmeasured split.
ConditionalGaussianState conditional_state(const CovarianceMatrix& cm,
                                           const std::vector<int>& measured_modes,
                                           const CovarianceMatrix& meas_cm,
                                           const Vector& outcome);

/// Characteristic function C_kk'(xi) of the commutator [rho_k, rho_k'] of two
/// conditional states sharing the CM sigma. Vanishes identically for all
/// xi, k, k' iff the state is classical across the split. The measured modes
/// are the first meas_cm.modes() modes.
std::complex<double> commutator_char_fn(const CovarianceMatrix& cm,
                                        const CovarianceMatrix& meas_cm,
                                        const Vector& outcome_k,
                                        const Vector& outcome_kp,
                                        const Vector& xi);

/// Werner-style decomposition record of a separable CM built as
/// gamma_a (+) gamma_b + P.
struct ProductNoiseDecomposition {
  CovarianceMatrix gamma_a;
  CovarianceMatrix gamma_b;
  /// Classical noise matrix P (PSD).
  Matrix noise;
  /// Eigenvectors of P for the strictly positive eigenvalues, one per column.
  Matrix noise_basis;
  /// Strictly positive eigenvalues of P (threshold 1e-10).
  Vector noise_eigs;
};

/// Composes the separable CM gamma_a (+) gamma_b + P. Eigenvalues of P in
/// [-1e-10, 0) are clamped to zero; anything lower throws NotPSD.
std::pair<CovarianceMatrix, ProductNoiseDecomposition> product_noise_compose(
    const CovarianceMatrix& gamma_a, const CovarianceMatrix& gamma_b,
    const Matrix& noise);

}  // namespace cvact
