#pragma once

#include "cvact/fock.hpp"

namespace cvact {

/// Result of the adaptive truncated negativity sum.
struct NegativityResult {
  double value;          // >= 0
  int cutoff_used;
  double tail_estimate;  // last increment + trace deficit
  bool converged;
};

/// Output negativity of the activation protocol for a zero-mean two-mode
/// Gaussian input, value = (sum_{m,n} |rho_{m,n}| - 1) / 2 over the truncated
/// Fock table. The cutoff grows in steps of 4 photons per mode until both the
/// sum increment and the trace deficit fall below tol; if max_cutoff is
/// reached first the best value is returned with converged = false.
NegativityResult negativity_truncated(const CovarianceMatrix& cm,
                                      double tol = 1e-8, int max_cutoff = 36);

/// Closed form for the two-mode squeezed vacuum: (e^{2r} - 1) / 2.
double negativity_pure(double r);

/// Series value for the unbiased coherent-state mixture with local thermal
/// photons sigma2. Terms caps the series length; convergence is declared by a
/// geometric ratio test with absolute tail below 1e-10.
double negativity_coherent_mixture(double sigma2, int terms = 800);

struct BoundResult {
  double lower_bound;   // (husimi_value - 1) / 2, may be negative
  double husimi_value;  // (pi e)^2 Phi(1, 1)
};

/// Analytic lower bound on the output negativity from the Husimi function at
/// unit coherent amplitudes.
BoundResult lower_bound(const CovarianceMatrix& cm);

/// Sum of |rho_{m,n}| over all stored elements.
double l1_norm(const TruncatedDensityMatrix& tdm);

/// (l1_norm - 1) / 2 without clamping; the quantity the dense partial
/// transpose oracle must reproduce exactly on the same truncated table.
double l1_shortcut_negativity(const TruncatedDensityMatrix& tdm);

/// State families for sweeps, parameterized by the local mean thermal photon
/// number nbar: Pure uses nbar = sinh^2 r, CoherentMixture uses nbar = sigma2.
/// StandardFormGrid is the symmetric squeezed-thermal family
/// a = b = nbar + 1/2, c1 = -c2 = sqrt(nbar (nbar+1)) / 2.
enum class Family { Pure, CoherentMixture, StandardFormGrid };

StandardFormParams family_params(Family family, double nbar);

/// Closed-form lower bounds as functions of nbar.
double bound_pure_nbar(double nbar);
double bound_mixture_nbar(double nbar);
/// Closed-form pure negativity as a function of nbar.
double negativity_pure_nbar(double nbar);

struct ExtremaResult {
  double argmax_nbar;
  double max_value;
  double zero_crossing_nbar;
};

/// Maximum and zero crossing of the closed-form lower bound, located by
/// golden-section search and bisection. Only the Pure and CoherentMixture
/// families have closed-form bounds.
ExtremaResult bound_extrema(Family family);

}  // namespace cvact
