#include "cvact/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace cvact {

namespace {

using Complex = std::complex<double>;

void quadrature_indices(const std::vector<int>& modes, std::vector<int>* out) {
  out->clear();
  for (int m : modes) {
    out->push_back(2 * m);
    out->push_back(2 * m + 1);
  }
}

}  // namespace

Matrix symplectic_form(int modes) {
  Matrix omega = Matrix::Zero(2 * modes, 2 * modes);
  for (int m = 0; m < modes; ++m) {
    omega(2 * m, 2 * m + 1) = 1.0;
    omega(2 * m + 1, 2 * m) = -1.0;
  }
  return omega;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

double min_bona_fide_eigenvalue(const Matrix& gamma) {
  const int n = static_cast<int>(gamma.rows());
  ComplexMatrix h = gamma.cast<Complex>();
  h += Complex(0.0, 0.5) * symplectic_form(n / 2).cast<Complex>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h,
                                                  Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_bona_fide(const Matrix& gamma, double tol) {
  if (gamma.rows() != gamma.cols() || gamma.rows() % 2 != 0) return false;
  if ((gamma - gamma.transpose()).cwiseAbs().maxCoeff() > 1e-8) return false;
  return min_bona_fide_eigenvalue(gamma) >= -tol;
}

std::vector<double> symplectic_eigenvalues(const Matrix& gamma) {
  const int dim = static_cast<int>(gamma.rows());
  const int modes = dim / 2;
  Eigen::SelfAdjointEigenSolver<Matrix> es(gamma);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw SingularMatrix("symplectic_eigenvalues: matrix not positive definite");
  }
  Matrix sqrt_g = es.operatorSqrt();
  // gamma^{1/2} (i Omega) gamma^{1/2} is Hermitian and similar to i Omega gamma.
  ComplexMatrix k = sqrt_g.cast<Complex>() *
                    (Complex(0.0, 1.0) * symplectic_form(modes).cast<Complex>()) *
                    sqrt_g.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> ks(k, Eigen::EigenvaluesOnly);
  // Spectrum is symmetric +/- nu; keep the positive half.
  std::vector<double> nus;
  for (int i = 0; i < dim; ++i) {
    double v = ks.eigenvalues()(i);
    if (v > 0.0) nus.push_back(v);
  }
  std::sort(nus.begin(), nus.end());
  if (static_cast<int>(nus.size()) != modes) {
    // Degenerate zero crossings cannot occur for positive definite input, but
    // keep the output well-formed.
    nus.resize(modes, 0.0);
  }
  return nus;
}

CovarianceMatrix::CovarianceMatrix(Matrix entries, double tol) {
  if (entries.rows() != entries.cols() || entries.rows() % 2 != 0 ||
      entries.rows() == 0) {
    throw BonaFideViolation("covariance matrix must be square with even dimension");
  }
  const double asym = (entries - entries.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-8) {
    throw BonaFideViolation("covariance matrix is not symmetric");
  }
  m_ = 0.5 * (entries + entries.transpose());
  modes_ = static_cast<int>(m_.rows()) / 2;
  const double min_eig = min_bona_fide_eigenvalue(m_);
  if (min_eig < -tol) {
    throw BonaFideViolation("uncertainty principle violated: min eig of gamma + (i/2)Omega = " +
                            std::to_string(min_eig));
  }
}

CovarianceMatrix CovarianceMatrix::vacuum(int modes) {
  return CovarianceMatrix(kVacuumVariance * Matrix::Identity(2 * modes, 2 * modes));
}

CovarianceMatrix CovarianceMatrix::thermal(int modes, double nbar) {
  return CovarianceMatrix((nbar + kVacuumVariance) *
                          Matrix::Identity(2 * modes, 2 * modes));
}

CovarianceMatrix heterodyne_cm(int modes) { return CovarianceMatrix::vacuum(modes); }

SymplecticMap::SymplecticMap(Matrix entries, double tol) {
  if (entries.rows() != entries.cols() || entries.rows() % 2 != 0) {
    throw Error("symplectic map must be square with even dimension");
  }
  if (!is_symplectic(entries, tol)) {
    throw Error("matrix does not satisfy S Omega S^T = Omega");
  }
  m_ = std::move(entries);
  modes_ = static_cast<int>(m_.rows()) / 2;
}

SymplecticMap SymplecticMap::identity(int modes) {
  return SymplecticMap(Matrix::Identity(2 * modes, 2 * modes));
}

SymplecticMap SymplecticMap::rotation(double theta) {
  Matrix s(2, 2);
  s << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  return SymplecticMap(s);
}

SymplecticMap SymplecticMap::squeezer(double s) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::exp(s);
  m(1, 1) = std::exp(-s);
  return SymplecticMap(m);
}

SymplecticMap SymplecticMap::beam_splitter(int modes, int i, int j,
                                           double theta) {
  Matrix s = Matrix::Identity(2 * modes, 2 * modes);
  const double c = std::cos(theta);
  const double sn = std::sin(theta);
  for (int q = 0; q < 2; ++q) {
    s(2 * i + q, 2 * i + q) = c;
    s(2 * j + q, 2 * j + q) = c;
    s(2 * i + q, 2 * j + q) = sn;
    s(2 * j + q, 2 * i + q) = -sn;
  }
  return SymplecticMap(s);
}

SymplecticMap SymplecticMap::mode_permutation(const std::vector<int>& perm) {
  const int modes = static_cast<int>(perm.size());
  Matrix s = Matrix::Zero(2 * modes, 2 * modes);
  for (int k = 0; k < modes; ++k) {
    s(2 * k, 2 * perm[k]) = 1.0;
    s(2 * k + 1, 2 * perm[k] + 1) = 1.0;
  }
  return SymplecticMap(s);
}

SymplecticMap SymplecticMap::direct_sum(const SymplecticMap& a,
                                        const SymplecticMap& b) {
  return SymplecticMap(cvact::direct_sum(a.entries(), b.entries()));
}

bool is_symplectic(const Matrix& s, double tol) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0 || s.rows() == 0) return false;
  const Matrix omega = symplectic_form(static_cast<int>(s.rows()) / 2);
  return (s * omega * s.transpose() - omega).cwiseAbs().maxCoeff() <= tol;
}

StandardFormParams StandardFormParams::tmsv(double r) {
  return {0.5 * std::cosh(2.0 * r), 0.5 * std::cosh(2.0 * r),
          0.5 * std::sinh(2.0 * r), -0.5 * std::sinh(2.0 * r)};
}

StandardFormParams StandardFormParams::coherent_mixture(double sigma2) {
  return {sigma2 + 0.5, sigma2 + 0.5, sigma2, sigma2};
}

CovarianceMatrix assemble_standard_form(const StandardFormParams& p) {
  Matrix g = Matrix::Zero(4, 4);
  g(0, 0) = g(1, 1) = p.a;
  g(2, 2) = g(3, 3) = p.b;
  g(0, 2) = g(2, 0) = p.c1;
  g(1, 3) = g(3, 1) = p.c2;
  return CovarianceMatrix(g);
}

namespace {

// One-mode symplectic s with s A s^T = sqrt(det A) * Identity. For 2x2
// matrices symplectic is exactly det = 1.
Matrix williamson_local(const Matrix& a) {
  const double nu = std::sqrt(a.determinant());
  Eigen::SelfAdjointEigenSolver<Matrix> es(a / nu);
  const Vector inv_sqrt = es.eigenvalues().cwiseSqrt().cwiseInverse();
  return es.eigenvectors() * inv_sqrt.asDiagonal() *
         es.eigenvectors().transpose();
}

}  // namespace

StandardFormParams standard_form_invariants(const CovarianceMatrix& cm) {
  if (cm.modes() != 2) {
    throw NotTwoModes("standard_form_invariants requires a two-mode CM");
  }
  const Matrix& g = cm.entries();
  const Matrix a_blk = g.topLeftCorner(2, 2);
  const Matrix b_blk = g.bottomRightCorner(2, 2);
  const double det_a = a_blk.determinant();
  const double det_b = b_blk.determinant();
  if (det_a < 0.25 - kPsdTol || det_b < 0.25 - kPsdTol) {
    throw DegenerateBlock("local block with det < 1/4 is unphysical");
  }
  const double a = std::sqrt(det_a);
  const double b = std::sqrt(det_b);

  // Reduce directly: local Williamson maps send A -> a I and B -> b I, then
  // an SVD of the transformed cross block diagonalizes it with rotations.
  // This stays accurate where the invariant quadratic degenerates (c1 = -c2).
  const Matrix c_local = williamson_local(a_blk) * g.topRightCorner(2, 2) *
                         williamson_local(b_blk).transpose();
  Eigen::JacobiSVD<Matrix> svd(c_local);
  const double sign_c = c_local.determinant() < 0.0 ? -1.0 : 1.0;
  const double c1 = svd.singularValues()(0);
  const double c2 = sign_c * svd.singularValues()(1);
  return {a, b, c1, c2};
}

PptResult ppt_separability(const CovarianceMatrix& cm, double tol) {
  if (cm.modes() != 2) {
    throw NotTwoModes("ppt_separability requires a two-mode CM");
  }
  const double nu = min_pt_symplectic_eig(cm, {1});
  return {nu < 0.5 - tol ? Separability::Entangled : Separability::Separable,
          nu};
}

Matrix partial_transpose_cm(const Matrix& gamma,
                            const std::vector<int>& transposed_modes) {
  Vector diag = Vector::Ones(gamma.rows());
  for (int m : transposed_modes) diag(2 * m + 1) = -1.0;
  return diag.asDiagonal() * gamma * diag.asDiagonal();
}

double min_pt_symplectic_eig(const CovarianceMatrix& cm,
                             const std::vector<int>& transposed_modes) {
  const Matrix pt = partial_transpose_cm(cm.entries(), transposed_modes);
  return symplectic_eigenvalues(pt).front();
}

bool is_classical(const CovarianceMatrix& cm, const std::vector<int>& modes_a,
                  double tol) {
  std::vector<int> rows;
  quadrature_indices(modes_a, &rows);
  std::vector<int> modes_b;
  for (int m = 0; m < cm.modes(); ++m) {
    if (std::find(modes_a.begin(), modes_a.end(), m) == modes_a.end()) {
      modes_b.push_back(m);
    }
  }
  std::vector<int> cols;
  quadrature_indices(modes_b, &cols);
  double max_abs = 0.0;
  for (int r : rows) {
    for (int c : cols) {
      max_abs = std::max(max_abs, std::abs(cm(r, c)));
    }
  }
  return max_abs <= tol;
}

}  // namespace cvact
