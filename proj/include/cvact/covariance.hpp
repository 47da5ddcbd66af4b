#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cvact/errors.hpp"

namespace cvact {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;

/// PSD tolerance used for all bona fide / certificate eigenvalue tests.
/// Eigensolves of exactly-marginal matrices (pure states) produce tiny
/// negative eigenvalues; anything in [-kPsdTol, 0) is treated as zero.
inline constexpr double kPsdTol = 1e-10;

/// Vacuum quadrature variance in hbar = 1 units. The whole library uses the
/// convention vacuum CM = (1/2) * Identity, quadratures ordered
/// (x1, p1, ..., xL, pL).
inline constexpr double kVacuumVariance = 0.5;

/// Standard symplectic form: block-diagonal with 2x2 blocks ((0,1),(-1,0)).
Matrix symplectic_form(int modes);

/// Direct sum of two square matrices.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Minimum eigenvalue of the Hermitian matrix gamma + (i/2) Omega.
double min_bona_fide_eigenvalue(const Matrix& gamma);

/// True iff gamma + (i/2) Omega >= -tol, i.e. gamma is a valid quantum CM.
bool is_bona_fide(const Matrix& gamma, double tol = kPsdTol);

/// Symplectic eigenvalues of a (positive definite) symmetric matrix, sorted
/// ascending. Computed as the positive spectrum of the Hermitian matrix
/// gamma^{1/2} (i Omega) gamma^{1/2}, which is similar to i Omega gamma.
std::vector<double> symplectic_eigenvalues(const Matrix& gamma);

/// Real symmetric 2L x 2L second-moment matrix of an L-mode Gaussian state.
/// Construction validates symmetry and the bona fide condition.
class CovarianceMatrix {
 public:
  explicit CovarianceMatrix(Matrix entries, double tol = kPsdTol);

  static CovarianceMatrix vacuum(int modes);
  /// Thermal state with nbar mean photons per mode: (nbar + 1/2) * Identity.
  static CovarianceMatrix thermal(int modes, double nbar);

  int modes() const { return modes_; }
  int dim() const { return 2 * modes_; }
  const Matrix& entries() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

 private:
  Matrix m_;
  int modes_;
};

/// Heterodyne measurement CM, (1/2) * Identity on the measured modes.
CovarianceMatrix heterodyne_cm(int modes);

/// Real 2L x 2L matrix satisfying S Omega S^T = Omega within 1e-12.
class SymplecticMap {
 public:
  explicit SymplecticMap(Matrix entries, double tol = 1e-12);

  static SymplecticMap identity(int modes);
  /// Single-mode phase rotation by theta.
  static SymplecticMap rotation(double theta);
  /// Single-mode squeezer diag(e^s, e^-s).
  static SymplecticMap squeezer(double s);
  /// Beam splitter mixing modes i and j of an L-mode system by angle theta.
  static SymplecticMap beam_splitter(int modes, int i, int j, double theta);
  /// Permutation of whole modes: mode k of the output is mode perm[k] of the
  /// input.
  static SymplecticMap mode_permutation(const std::vector<int>& perm);

  /// Block-diagonal composition acting on the concatenated mode list.
  static SymplecticMap direct_sum(const SymplecticMap& a,
                                  const SymplecticMap& b);

  int modes() const { return modes_; }
  const Matrix& entries() const { return m_; }

  /// gamma -> S gamma S^T
  Matrix apply(const Matrix& gamma) const { return m_ * gamma * m_.transpose(); }

 private:
  Matrix m_;
  int modes_;
};

/// True iff ||S Omega S^T - Omega||_max <= tol. Pure predicate, never throws.
bool is_symplectic(const Matrix& s, double tol = 1e-10);

/// Two-mode standard form (a, b, c1, c2): A = diag(a,a), B = diag(b,b),
/// C = diag(c1, c2).
struct StandardFormParams {
  double a;
  double b;
  double c1;
  double c2;

  static StandardFormParams vacuum() { return {0.5, 0.5, 0.0, 0.0}; }
  /// Two-mode squeezed vacuum with squeezing parameter r.
  static StandardFormParams tmsv(double r);
  /// Unbiased mixture of coherent states with local thermal photons sigma2.
  static StandardFormParams coherent_mixture(double sigma2);
};

/// Builds the 4x4 standard-form CM. Throws BonaFideViolation if (a,b,c1,c2)
/// is not physical.
CovarianceMatrix assemble_standard_form(const StandardFormParams& p);

/// Reduces an arbitrary two-mode CM to standard-form parameters through the
/// local-symplectic invariants det A, det B, det C, det gamma. Sign
/// convention: c1 >= |c2|.
StandardFormParams standard_form_invariants(const CovarianceMatrix& cm);

enum class Separability { Separable, Entangled };

struct PptResult {
  Separability verdict;
  /// Smallest symplectic eigenvalue of the partially transposed CM.
  double min_pt_symplectic_eig;
};

/// Simon PPT criterion for two-mode states (necessary and sufficient for
/// 1x1 modes). Entangled iff the smallest PT symplectic eigenvalue is
/// < 1/2 - tol.
PptResult ppt_separability(const CovarianceMatrix& cm, double tol = kPsdTol);

/// Partial transpose in phase space: flips the momentum sign of every mode in
/// transposed_modes.
Matrix partial_transpose_cm(const Matrix& gamma,
                            const std::vector<int>& transposed_modes);

/// Smallest symplectic eigenvalue of the partial transpose across the given
/// mode subset. >= 1/2 means the PPT (necessary) separability test passes.
double min_pt_symplectic_eig(const CovarianceMatrix& cm,
                             const std::vector<int>& transposed_modes);

/// Classicality test: a Gaussian state is classically correlated across the
/// bipartition iff the off-diagonal block C vanishes, ||C||_max <= tol.
bool is_classical(const CovarianceMatrix& cm, const std::vector<int>& modes_a,
                  double tol = 1e-10);

}  // namespace cvact
