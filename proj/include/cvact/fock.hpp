#pragma once

#include <complex>
#include <vector>

#include "cvact/covariance.hpp"

namespace cvact {

/// Symmetric complex 4x4 matrix defining the four-dimensional Hermite
/// polynomials of a two-mode Gaussian state, together with
/// det_factor = det(gamma + (1/2) Identity).
struct RMatrix {
  ComplexMatrix entries;
  double det_factor;
};

/// R = W O [(gamma + 1/2)^-1 - 1] O^dag V for a zero-mean two-mode state.
/// For standard-form CMs the result is real.
RMatrix build_r_matrix(const CovarianceMatrix& cm);

/// Closed form of the R matrix for a standard-form CM:
///   R = ( R1-R2        R1+R2-1 )
///       ( R1+R2-1      R1-R2   ),
/// R_j = ((b+1/2, -c_j), (-c_j, a+1/2)) / (2 d_j), d_j = (a+1/2)(b+1/2)-c_j^2.
RMatrix standard_form_r_matrix(const StandardFormParams& p);

struct MultiIndex {
  int m1, m2, n1, n2;
  int parity() const { return (m1 + m2 + n1 + n2) % 2; }
};

/// Per-mode photon cutoff cap for the dense (d+1)^4 tables. Defaults to 40;
/// the environment variable CVACT_MAX_CUTOFF overrides it.
int max_cutoff_cap();

/// Memoized table of factorial-scaled four-index Hermite values
///   h_mu = H_mu^(R)(0) / sqrt(m1! m2! n1! n2!),
/// filled by parity level with the scaled recurrence
///   h_{mu+e_i} sqrt(mu_i+1) = - sum_j r_ij sqrt(mu_j) h_{mu-e_j}.
/// Entries of odd total parity are exactly zero. Raw H values grow like
/// sqrt(mu!), so the scaled storage is what keeps d ~ 40 in range.
class HermiteTable {
 public:
  HermiteTable(RMatrix r, int cutoff);

  int cutoff() const { return cutoff_; }
  const RMatrix& r_matrix() const { return r_; }
  const std::vector<std::complex<double>>& values() const { return values_; }

  std::complex<double> scaled(int m1, int m2, int n1, int n2) const {
    return values_[index(m1, m2, n1, n2)];
  }
  std::complex<double> scaled(const MultiIndex& mu) const {
    return scaled(mu.m1, mu.m2, mu.n1, mu.n2);
  }
  /// Unscaled H_mu^(R)(0), recovered as h_mu * sqrt(prod mu!).
  std::complex<double> unscaled(int m1, int m2, int n1, int n2) const;

  std::size_t index(int m1, int m2, int n1, int n2) const {
    const std::size_t d1 = static_cast<std::size_t>(cutoff_) + 1;
    return ((static_cast<std::size_t>(m1) * d1 + m2) * d1 + n1) * d1 + n2;
  }

  /// Transfers ownership of the value buffer (leaves the table empty).
  std::vector<std::complex<double>> take_values() { return std::move(values_); }

 private:
  RMatrix r_;
  int cutoff_;
  std::vector<std::complex<double>> values_;
};

/// Fock-basis density matrix of a zero-mean two-mode Gaussian state,
/// truncated at `cutoff` photons per mode:
///   rho_{m,n} = h_mu / sqrt(det_factor).
class TruncatedDensityMatrix {
 public:
  TruncatedDensityMatrix(int cutoff, std::vector<std::complex<double>> elements);

  int cutoff() const { return cutoff_; }
  const std::vector<std::complex<double>>& elements() const { return elements_; }
  double trace_deficit() const { return trace_deficit_; }
  double trace() const { return 1.0 - trace_deficit_; }

  std::complex<double> operator()(int m1, int m2, int n1, int n2) const {
    return elements_[index(m1, m2, n1, n2)];
  }
  std::complex<double> operator()(const MultiIndex& mu) const {
    return (*this)(mu.m1, mu.m2, mu.n1, mu.n2);
  }
  std::size_t index(int m1, int m2, int n1, int n2) const {
    const std::size_t d1 = static_cast<std::size_t>(cutoff_) + 1;
    return ((static_cast<std::size_t>(m1) * d1 + m2) * d1 + n1) * d1 + n2;
  }

 private:
  int cutoff_;
  std::vector<std::complex<double>> elements_;
  double trace_deficit_;
};

/// Truncated Fock elements of a bona fide two-mode CM via the Hermite
/// recurrence. Throws CutoffTooLarge beyond the configured cap.
TruncatedDensityMatrix fock_elements(const CovarianceMatrix& cm, int cutoff);

struct GeneratingFunctionCheck {
  std::complex<double> lhs;          // exp(-1/2 h^T R h)
  std::complex<double> rhs_partial;  // truncated quadruple series
};

/// Both sides of the Hermite generating-function identity at the origin,
/// h = (conj(a1), conj(a2), a1, a2).
GeneratingFunctionCheck generating_function_check(const RMatrix& r,
                                                  std::complex<double> alpha1,
                                                  std::complex<double> alpha2,
                                                  int cutoff);

/// Husimi Q function at (alpha1, alpha2):
///   Phi(a1, a2) = exp(-1/2 h^T R h - |a1|^2 - |a2|^2) / (pi^2 sqrt(det_factor)).
double husimi_at(const CovarianceMatrix& cm, std::complex<double> alpha1,
                 std::complex<double> alpha2);

}  // namespace cvact
