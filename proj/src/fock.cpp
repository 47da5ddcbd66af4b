#include "cvact/fock.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace cvact {

namespace {

using Complex = std::complex<double>;

const ComplexMatrix& matrix_w() {
  static const ComplexMatrix w = [] {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
    return m;
  }();
  return w;
}

const ComplexMatrix& matrix_v() {
  static const ComplexMatrix v = [] {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 2) = m(1, 0) = m(2, 3) = m(3, 1) = 1.0;
    return m;
  }();
  return v;
}

const ComplexMatrix& matrix_o() {
  static const ComplexMatrix o = [] {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    ComplexMatrix blk(2, 2);
    blk << Complex(inv_sqrt2, 0.0), Complex(0.0, inv_sqrt2),
        Complex(inv_sqrt2, 0.0), Complex(0.0, -inv_sqrt2);
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m.topLeftCorner(2, 2) = blk;
    m.bottomRightCorner(2, 2) = blk;
    return m;
  }();
  return o;
}

double log_sqrt_factorials(int m1, int m2, int n1, int n2) {
  return 0.5 * (std::lgamma(m1 + 1.0) + std::lgamma(m2 + 1.0) +
                std::lgamma(n1 + 1.0) + std::lgamma(n2 + 1.0));
}

Complex quadratic_form(const ComplexMatrix& r, Complex alpha1, Complex alpha2) {
  Eigen::Vector4cd h;
  h << std::conj(alpha1), std::conj(alpha2), alpha1, alpha2;
  return h.transpose() * r * h;
}

}  // namespace

int max_cutoff_cap() {
  if (const char* env = std::getenv("CVACT_MAX_CUTOFF")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(v);
  }
  return 40;
}

RMatrix build_r_matrix(const CovarianceMatrix& cm) {
  if (cm.modes() != 2) throw NotTwoModes("build_r_matrix requires a two-mode CM");
  const Matrix m = cm.entries() + 0.5 * Matrix::Identity(4, 4);
  const double det = m.determinant();
  if (!(det > 0.0)) throw SingularMatrix("gamma + 1/2 is not invertible");
  Eigen::FullPivLU<Matrix> lu(m);
  if (!lu.isInvertible()) throw SingularMatrix("gamma + 1/2 is not invertible");
  const ComplexMatrix core =
      (lu.inverse() - Matrix::Identity(4, 4)).cast<Complex>();
  ComplexMatrix r =
      matrix_w() * matrix_o() * core * matrix_o().adjoint() * matrix_v();
  return {std::move(r), det};
}

RMatrix standard_form_r_matrix(const StandardFormParams& p) {
  Eigen::Matrix2d r_j[2];
  double d_j[2];
  const double c[2] = {p.c1, p.c2};
  for (int j = 0; j < 2; ++j) {
    d_j[j] = (p.a + 0.5) * (p.b + 0.5) - c[j] * c[j];
    r_j[j] << p.b + 0.5, -c[j], -c[j], p.a + 0.5;
    r_j[j] /= 2.0 * d_j[j];
  }
  const Eigen::Matrix2d diff = r_j[0] - r_j[1];
  const Eigen::Matrix2d cross = r_j[0] + r_j[1] - Eigen::Matrix2d::Identity();
  Matrix r(4, 4);
  r.topLeftCorner(2, 2) = diff;
  r.bottomRightCorner(2, 2) = diff;
  r.topRightCorner(2, 2) = cross;
  r.bottomLeftCorner(2, 2) = cross;
  return {r.cast<Complex>(), d_j[0] * d_j[1]};
}

HermiteTable::HermiteTable(RMatrix r, int cutoff)
    : r_(std::move(r)), cutoff_(cutoff) {
  if (cutoff < 0) throw Error("cutoff must be non-negative");
  const int cap = max_cutoff_cap();
  if (cutoff > cap) {
    throw CutoffTooLarge("cutoff " + std::to_string(cutoff) +
                         " exceeds the cap " + std::to_string(cap) +
                         " (override with CVACT_MAX_CUTOFF)");
  }
  const int d = cutoff_;
  const std::size_t d1 = static_cast<std::size_t>(d) + 1;
  values_.assign(d1 * d1 * d1 * d1, Complex(0.0, 0.0));
  values_[0] = Complex(1.0, 0.0);
  if (d == 0) return;

  std::vector<double> sqrt_int(4 * d + 2);
  for (std::size_t i = 0; i < sqrt_int.size(); ++i) {
    sqrt_int[i] = std::sqrt(static_cast<double>(i));
  }

  // Fill by total level; odd levels stay exactly zero (every odd-parity value
  // would be a sum over odd-parity predecessors, zero by induction).
  for (int level = 2; level <= 4 * d; level += 2) {
    for (int m1 = std::min(d, level); m1 >= 0; --m1) {
      for (int m2 = std::min(d, level - m1); m2 >= 0; --m2) {
        const int rem = level - m1 - m2;
        for (int n1 = std::min(d, rem); n1 >= 0; --n1) {
          const int n2 = rem - n1;
          if (n2 < 0 || n2 > d) continue;
          int nu[4] = {m1, m2, n1, n2};
          int pivot = 0;
          while (nu[pivot] == 0) ++pivot;
          int mu[4] = {nu[0], nu[1], nu[2], nu[3]};
          mu[pivot] -= 1;
          Complex acc(0.0, 0.0);
          for (int j = 0; j < 4; ++j) {
            if (mu[j] == 0) continue;
            int prev[4] = {mu[0], mu[1], mu[2], mu[3]};
            prev[j] -= 1;
            acc += r_.entries(pivot, j) * sqrt_int[mu[j]] *
                   values_[index(prev[0], prev[1], prev[2], prev[3])];
          }
          values_[index(m1, m2, n1, n2)] = -acc / sqrt_int[nu[pivot]];
        }
      }
    }
  }
}

Complex HermiteTable::unscaled(int m1, int m2, int n1, int n2) const {
  return scaled(m1, m2, n1, n2) *
         std::exp(log_sqrt_factorials(m1, m2, n1, n2));
}

TruncatedDensityMatrix::TruncatedDensityMatrix(
    int cutoff, std::vector<std::complex<double>> elements)
    : cutoff_(cutoff), elements_(std::move(elements)) {
  double trace = 0.0;
  for (int m1 = 0; m1 <= cutoff_; ++m1) {
    for (int m2 = 0; m2 <= cutoff_; ++m2) {
      trace += elements_[index(m1, m2, m1, m2)].real();
    }
  }
  trace_deficit_ = 1.0 - trace;
}

TruncatedDensityMatrix fock_elements(const CovarianceMatrix& cm, int cutoff) {
  HermiteTable table(build_r_matrix(cm), cutoff);
  const double inv_sqrt_det = 1.0 / std::sqrt(table.r_matrix().det_factor);
  std::vector<Complex> elements = table.take_values();
  for (Complex& v : elements) v *= inv_sqrt_det;
  return TruncatedDensityMatrix(cutoff, std::move(elements));
}

GeneratingFunctionCheck generating_function_check(const RMatrix& r,
                                                  Complex alpha1,
                                                  Complex alpha2, int cutoff) {
  const Complex lhs = std::exp(-0.5 * quadratic_form(r.entries, alpha1, alpha2));
  HermiteTable table(r, cutoff);

  const int d1 = cutoff + 1;
  std::vector<Complex> pow_m1(d1), pow_m2(d1), pow_n1(d1), pow_n2(d1);
  std::vector<double> inv_sqrt_fact(d1);
  pow_m1[0] = pow_m2[0] = pow_n1[0] = pow_n2[0] = 1.0;
  inv_sqrt_fact[0] = 1.0;
  for (int k = 1; k < d1; ++k) {
    pow_m1[k] = pow_m1[k - 1] * std::conj(alpha1);
    pow_m2[k] = pow_m2[k - 1] * std::conj(alpha2);
    pow_n1[k] = pow_n1[k - 1] * alpha1;
    pow_n2[k] = pow_n2[k - 1] * alpha2;
    inv_sqrt_fact[k] = inv_sqrt_fact[k - 1] / std::sqrt(static_cast<double>(k));
  }

  // sum_mu h_mu * prod(alpha powers) / sqrt(prod mu!), since h already
  // carries one factor of 1/sqrt(mu!).
  Complex rhs(0.0, 0.0);
  for (int m1 = 0; m1 < d1; ++m1) {
    for (int m2 = 0; m2 < d1; ++m2) {
      const Complex pm = pow_m1[m1] * pow_m2[m2] *
                         (inv_sqrt_fact[m1] * inv_sqrt_fact[m2]);
      for (int n1 = 0; n1 < d1; ++n1) {
        for (int n2 = 0; n2 < d1; ++n2) {
          rhs += pm * pow_n1[n1] * pow_n2[n2] *
                 (inv_sqrt_fact[n1] * inv_sqrt_fact[n2]) *
                 table.scaled(m1, m2, n1, n2);
        }
      }
    }
  }
  return {lhs, rhs};
}

double husimi_at(const CovarianceMatrix& cm, Complex alpha1, Complex alpha2) {
  const RMatrix r = build_r_matrix(cm);
  const Complex q = quadratic_form(r.entries, alpha1, alpha2);
  const double pi = 3.14159265358979323846;
  const Complex val = std::exp(-0.5 * q - std::norm(alpha1) - std::norm(alpha2)) /
                      (pi * pi * std::sqrt(r.det_factor));
  return val.real();
}

}  // namespace cvact
