#pragma once

#include <optional>

#include "cvact/fock.hpp"
#include "cvact/gaussian.hpp"
#include "cvact/rng.hpp"

namespace cvact {

/// Row cap for the dense four-mode representation: (d+1)^4 <= 4096, d <= 7.
inline constexpr int kDenseRowCap = 4096;

/// Output of the CNOT activation protocol on a two-mode input with vacuum
/// ancillae: the maximally correlated state
///   sum_{m,n} rho_{m,n} |m><n|_AB (x) |m><n|_A'B',
/// stored through its pair amplitudes rho_{m,n}. A dense matrix on the full
/// four-mode truncated space is materialized for small cutoffs.
struct FourModeState {
  int cutoff;
  /// rho_{m,n} indexed as (m1, m2, n1, n2), same layout as the input table.
  std::vector<std::complex<double>> amplitudes;
  double trace;
  bool dense_enabled;
  ComplexMatrix dense;
};

/// Applies the CNOT pair to rho (x) |00><00|. The ancilla modes mirror the
/// system indices, so no output index can exceed the input cutoff.
FourModeState protocol_output(const TruncatedDensityMatrix& tdm);

/// Truncated two-mode CNOT |m, n> -> |m, m+n> on (cutoff+1)^2 basis states.
/// Columns whose target would exceed the cutoff are dropped (zero column);
/// the gate is the non-compact adder, not modular addition.
ComplexMatrix cnot_matrix(int cutoff);

/// Negativity across AB|A'B' from the dense partial transpose: builds
/// rho^{T_AB}, solves for all eigenvalues, returns (sum |lambda| - 1) / 2.
/// This is the independent oracle for the l1 shortcut.
double negativity_oracle_dense(const FourModeState& state);

/// Witness of AB|A'B' separability: gamma_out >= gamma_1 (+) gamma_2.
struct SeparabilityCertificate {
  CovarianceMatrix gamma_1;  // on AB
  CovarianceMatrix gamma_2;  // on A'B'
  Matrix residual;           // gamma_out - gamma_1 (+) gamma_2
  double min_residual_eig;
};

/// One no-activation run: a separable input built as product + classical
/// noise, local symplectics S_A, S_B, a global symplectic on all four modes,
/// and a two-mode ancilla CM. The default global map is the mode swap
/// A<->A', B<->B', for which any product input gives a product output across
/// the cut. Any other global map needs an explicit baseline certificate.
struct NoGoScenario {
  ProductNoiseDecomposition decomposition;
  SymplecticMap s_a;
  SymplecticMap s_b;
  SymplecticMap s_global;
  CovarianceMatrix gamma_ancilla;
  std::optional<std::pair<CovarianceMatrix, CovarianceMatrix>>
      baseline_certificate;

  static NoGoScenario random(Rng& rng);
};

/// The swap A<->A', B<->B' as a four-mode symplectic map.
SymplecticMap ancilla_swap();

struct NoGoOutcome {
  CovarianceMatrix gamma_out;
  CovarianceMatrix gamma_out_baseline;
  SeparabilityCertificate certificate;
  /// Smallest symplectic eigenvalue of the AB|A'B' partial transpose of
  /// gamma_out; >= 1/2 is the necessary-condition cross-check.
  double min_pt_symplectic_eig;
};

/// Runs the scenario: conjugates the product (+) ancilla CM, adds the
/// relocated classical noise at the CM level, and verifies the Werner
/// ordering gamma_out >= gamma_1 (+) gamma_2. Throws CertificateFailed if the
/// residual is not PSD within tolerance.
NoGoOutcome nogo_run(const NoGoScenario& scenario);

/// One Monte Carlo draw of the relocated classical displacement: the
/// eight-component vector S ((S_A (+) S_B) V R ; 0) with R Gaussian of
/// covariance diag(noise eigenvalues). Its covariance over draws is exactly
/// the additive noise term nogo_run applies at the CM level; sampling exists
/// for demonstration output, the certificates never need it.
Vector nogo_sample_displacement(const NoGoScenario& scenario, Rng& rng);

enum class FaithfulnessVerdict {
  ClassicalSeparableOutput,
  NonclassicalEntangledOutput
};

/// Protocol dichotomy on a two-mode input: classical inputs must give output
/// negativity <= tol, nonclassical inputs > tol. The negativity is evaluated
/// at standard form (the local unitaries are the standard-form reduction).
FaithfulnessVerdict faithfulness_check(const CovarianceMatrix& cm, double tol);

}  // namespace cvact
