#include "cvact/gaussian.hpp"

#include <algorithm>
#include <cmath>

namespace cvact {

namespace {

using Complex = std::complex<double>;

struct SplitBlocks {
  Matrix a;  // measured x measured
  Matrix b;  // rest x rest
  Matrix c;  // measured x rest
};

SplitBlocks split_cm(const CovarianceMatrix& cm,
                     const std::vector<int>& measured_modes) {
  std::vector<int> meas_q, rest_q;
  for (int m : measured_modes) {
    meas_q.push_back(2 * m);
    meas_q.push_back(2 * m + 1);
  }
  for (int m = 0; m < cm.modes(); ++m) {
    if (std::find(measured_modes.begin(), measured_modes.end(), m) ==
        measured_modes.end()) {
      rest_q.push_back(2 * m);
      rest_q.push_back(2 * m + 1);
    }
  }
  SplitBlocks blocks;
  blocks.a = cm.entries()(meas_q, meas_q);
  blocks.b = cm.entries()(rest_q, rest_q);
  blocks.c = cm.entries()(meas_q, rest_q);
  return blocks;
}

Matrix invert_or_throw(const Matrix& m, const char* what) {
  Eigen::FullPivLU<Matrix> lu(m);
  if (!lu.isInvertible()) throw SingularMatrix(what);
  return lu.inverse();
}

}  // namespace

ConditionalGaussianState conditional_state(const CovarianceMatrix& cm,
                                           const std::vector<int>& measured_modes,
                                           const CovarianceMatrix& meas_cm,
                                           const Vector& outcome) {
  const SplitBlocks blk = split_cm(cm, measured_modes);
  if (meas_cm.dim() != blk.a.rows()) {
    throw Error("measurement CM dimension does not match the measured modes");
  }
  if (outcome.size() != blk.a.rows()) {
    throw Error("outcome vector length does not match the measured modes");
  }
  const Matrix inv =
      invert_or_throw(blk.a + meas_cm.entries(), "A + gamma_m is singular");
  Matrix sigma = blk.b - blk.c.transpose() * inv * blk.c;
  sigma = 0.5 * (sigma + sigma.transpose());
  Vector mean = blk.c.transpose() * inv * outcome;
  return {CovarianceMatrix(sigma), std::move(mean)};
}

std::complex<double> commutator_char_fn(const CovarianceMatrix& cm,
                                        const CovarianceMatrix& meas_cm,
                                        const Vector& outcome_k,
                                        const Vector& outcome_kp,
                                        const Vector& xi) {
  std::vector<int> measured(meas_cm.modes());
  for (int m = 0; m < meas_cm.modes(); ++m) measured[m] = m;
  const ConditionalGaussianState st_k =
      conditional_state(cm, measured, meas_cm, outcome_k);
  const ConditionalGaussianState st_kp =
      conditional_state(cm, measured, meas_cm, outcome_kp);

  const Matrix& sigma = st_k.cm.entries();
  const int rest_modes = st_k.cm.modes();
  if (xi.size() != 2 * rest_modes) {
    throw Error("xi must have one (x, p) pair per unmeasured mode");
  }
  const double det_sigma = sigma.determinant();
  if (det_sigma <= 0.0) throw SingularMatrix("conditional CM is singular");
  const Matrix sigma_inv = invert_or_throw(sigma, "conditional CM is singular");
  const Matrix omega = symplectic_form(rest_modes);

  const Vector d_sum = st_k.mean + st_kp.mean;
  const Vector d_diff = st_k.mean - st_kp.mean;
  const Matrix quad = sigma + 0.25 * omega.transpose() * sigma_inv * omega;

  const double prefactor =
      2.0 / (std::pow(2.0, rest_modes) * std::sqrt(det_sigma));
  const Complex exponent(-0.25 * xi.dot(quad * xi) -
                             0.25 * d_diff.dot(sigma_inv * d_diff),
                         -0.5 * xi.dot(d_sum));
  const double sinh_arg = 0.25 * (-d_diff).dot(sigma_inv * omega * xi);
  return prefactor * std::exp(exponent) * std::sinh(sinh_arg);
}

std::pair<CovarianceMatrix, ProductNoiseDecomposition> product_noise_compose(
    const CovarianceMatrix& gamma_a, const CovarianceMatrix& gamma_b,
    const Matrix& noise) {
  const int dim = gamma_a.dim() + gamma_b.dim();
  if (noise.rows() != dim || noise.cols() != dim) {
    throw Error("noise matrix dimension does not match gamma_a (+) gamma_b");
  }
  if ((noise - noise.transpose()).cwiseAbs().maxCoeff() > 1e-8) {
    throw NotPSD("noise matrix is not symmetric");
  }
  const Matrix p_sym = 0.5 * (noise + noise.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(p_sym);
  if (es.eigenvalues().minCoeff() < -kPsdTol) {
    throw NotPSD("noise matrix has eigenvalue " +
                 std::to_string(es.eigenvalues().minCoeff()));
  }
  // Clamp marginal negatives to zero and keep strictly positive directions.
  Vector clamped = es.eigenvalues().cwiseMax(0.0);
  const Matrix p_eff =
      es.eigenvectors() * clamped.asDiagonal() * es.eigenvectors().transpose();

  std::vector<int> keep;
  for (int i = 0; i < dim; ++i) {
    if (clamped(i) > kPsdTol) keep.push_back(i);
  }
  Matrix basis(dim, static_cast<int>(keep.size()));
  Vector eigs(static_cast<int>(keep.size()));
  for (int j = 0; j < static_cast<int>(keep.size()); ++j) {
    basis.col(j) = es.eigenvectors().col(keep[j]);
    eigs(j) = clamped(keep[j]);
  }

  Matrix composed =
      direct_sum(gamma_a.entries(), gamma_b.entries()) + p_eff;
  composed = 0.5 * (composed + composed.transpose());
  ProductNoiseDecomposition decomposition{gamma_a, gamma_b, p_eff,
                                          std::move(basis), std::move(eigs)};
  return {CovarianceMatrix(composed), std::move(decomposition)};
}

}  // namespace cvact
