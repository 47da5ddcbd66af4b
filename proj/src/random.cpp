#include "cvact/random.hpp"

#include <cmath>

namespace cvact {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

SymplecticMap random_local_symplectic(Rng& rng, double max_squeeze) {
  const Matrix s = SymplecticMap::rotation(rng.uniform(0.0, kTwoPi)).entries() *
                   SymplecticMap::squeezer(rng.uniform(-max_squeeze, max_squeeze)).entries() *
                   SymplecticMap::rotation(rng.uniform(0.0, kTwoPi)).entries();
  return SymplecticMap(s);
}

SymplecticMap random_symplectic(int modes, Rng& rng, double max_squeeze) {
  Matrix s = Matrix::Identity(2 * modes, 2 * modes);
  for (int round = 0; round < 2; ++round) {
    Matrix locals = Matrix::Zero(2 * modes, 2 * modes);
    for (int m = 0; m < modes; ++m) {
      locals.block(2 * m, 2 * m, 2, 2) =
          random_local_symplectic(rng, max_squeeze).entries();
    }
    s = locals * s;
    for (int m = 0; m + 1 < modes; ++m) {
      s = SymplecticMap::beam_splitter(modes, m, m + 1, rng.uniform(0.0, kTwoPi))
              .entries() *
          s;
    }
  }
  return SymplecticMap(s);
}

CovarianceMatrix random_cm(int modes, Rng& rng, double nu_max,
                           double max_squeeze) {
  Vector diag(2 * modes);
  for (int m = 0; m < modes; ++m) {
    const double nu = rng.uniform(0.5, nu_max);
    diag(2 * m) = nu;
    diag(2 * m + 1) = nu;
  }
  const Matrix s = random_symplectic(modes, rng, max_squeeze).entries();
  Matrix g = s * diag.asDiagonal() * s.transpose();
  g = 0.5 * (g + g.transpose());
  return CovarianceMatrix(g);
}

Matrix random_psd(int dim, Rng& rng, double scale) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = scale * rng.normal();
    }
  }
  Matrix p = g * g.transpose();
  return 0.5 * (p + p.transpose());
}

}  // namespace cvact
