#include <doctest.h>

#include <cmath>
#include <complex>

#include "cvact/gaussian.hpp"
#include "cvact/random.hpp"
#include "oracles.hpp"

using namespace cvact;
using Complex = std::complex<double>;

namespace {

CovarianceMatrix coherent_mixture_cm(double sigma2) {
  return assemble_standard_form(StandardFormParams::coherent_mixture(sigma2));
}

}  // namespace

TEST_SUITE_BEGIN("gaussian");

TEST_CASE("conditional state of a product input is the unmeasured state") {
  Rng rng(7);
  const CovarianceMatrix a = random_cm(1, rng);
  const CovarianceMatrix b = random_cm(1, rng);
  const CovarianceMatrix cm(direct_sum(a.entries(), b.entries()));
  Vector k(2);
  k << 1.3, -0.4;
  const auto st = conditional_state(cm, {0}, heterodyne_cm(1), k);
  CHECK(st.mean.cwiseAbs().maxCoeff() == 0.0);
  CHECK((st.cm.entries() - b.entries()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("conditional state of the coherent mixture under heterodyne") {
  const CovarianceMatrix cm = coherent_mixture_cm(1.0);
  Vector k(2);
  k << 1.0, 0.0;
  const auto st = conditional_state(cm, {0}, heterodyne_cm(1), k);
  CHECK((st.cm.entries() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-14);
  CHECK(st.mean(0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(st.mean(1) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("conditional state of the TMSV stays physical") {
  const CovarianceMatrix cm =
      assemble_standard_form(StandardFormParams::tmsv(0.5));
  const auto st =
      conditional_state(cm, {0}, heterodyne_cm(1), Vector::Zero(2));
  CHECK(st.mean.cwiseAbs().maxCoeff() == 0.0);
  CHECK(symplectic_eigenvalues(st.cm.entries()).front() >= 0.5 - 1e-10);
}

TEST_CASE("conditional CM does not depend on the outcome") {
  Rng rng(31);
  const CovarianceMatrix cm = random_cm(2, rng);
  const auto ref =
      conditional_state(cm, {0}, heterodyne_cm(1), Vector::Zero(2));
  for (int trial = 0; trial < 10; ++trial) {
    Vector k(2);
    k << rng.normal(), rng.normal();
    const auto st = conditional_state(cm, {0}, heterodyne_cm(1), k);
    CHECK((st.cm.entries() - ref.cm.entries()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("commutator characteristic function vanishes in the trivial cases") {
  Rng rng(13);
  const CovarianceMatrix prod(
      direct_sum(random_cm(1, rng).entries(), random_cm(1, rng).entries()));
  Vector k(2), kp(2), xi(2);
  for (int trial = 0; trial < 10; ++trial) {
    k << rng.normal(), rng.normal();
    kp << rng.normal(), rng.normal();
    xi << rng.normal(), rng.normal();
    CHECK(std::abs(commutator_char_fn(prod, heterodyne_cm(1), k, kp, xi)) ==
          0.0);
  }
  // k = k' gives zero for any state.
  const CovarianceMatrix mix = coherent_mixture_cm(1.0);
  k << 0.7, -0.1;
  xi << 0.4, 0.9;
  CHECK(std::abs(commutator_char_fn(mix, heterodyne_cm(1), k, k, xi)) == 0.0);
}

TEST_CASE("commutator characteristic function matches the dense Fock oracle") {
  // Coherent mixture, sigma2 = 1: conditional states are displaced thermal
  // states with sigma = Identity, nbar = 1/2, d_k = k / 2.
  const CovarianceMatrix mix = coherent_mixture_cm(1.0);
  Vector k(2), kp(2);
  k << 1.0, 0.0;
  kp << 0.0, 0.0;

  const int dim = 21;
  const ComplexMatrix rho0 = oracles::thermal_state(dim, 0.5);
  const ComplexMatrix d1 = oracles::displacement(dim, 0.5, 0.0);
  const ComplexMatrix rho_k = d1 * rho0 * d1.adjoint();
  const ComplexMatrix comm = rho_k * rho0 - rho0 * rho_k;

  for (auto [xx, xp] : {std::pair{0.0, 1.0}, {0.7, -0.4}, {1.2, 0.3}}) {
    Vector xi(2);
    xi << xx, xp;
    const Complex lib = commutator_char_fn(mix, heterodyne_cm(1), k, kp, xi);
    const Complex dense = (comm * oracles::weyl(dim, xx, xp)).trace();
    CHECK(std::abs(lib - dense) < 1e-9);
  }

  Vector xi(2);
  xi << 0.0, 1.0;
  CHECK(std::abs(commutator_char_fn(mix, heterodyne_cm(1), k, kp, xi)) > 1e-3);
}

TEST_CASE("grid vanishing of C_kk' is equivalent to classicality") {
  Rng rng(17);
  const CovarianceMatrix prod(
      direct_sum(random_cm(1, rng).entries(), random_cm(1, rng).entries()));
  const CovarianceMatrix mix = coherent_mixture_cm(1.0);
  Vector k(2), kp(2), xi(2);
  k << 1.0, 0.0;
  kp << 0.0, 0.0;

  auto max_on_grid = [&](const CovarianceMatrix& cm) {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        xi << -2.0 + 4.0 * i / 9.0, -2.0 + 4.0 * j / 9.0;
        worst = std::max(worst, std::abs(commutator_char_fn(
                                    cm, heterodyne_cm(1), k, kp, xi)));
      }
    }
    return worst;
  };

  CHECK(is_classical(prod, {0}));
  CHECK(max_on_grid(prod) <= 1e-12);
  CHECK_FALSE(is_classical(mix, {0}));
  CHECK(max_on_grid(mix) > 1e-3);
}

TEST_CASE("product_noise_compose with zero noise is the plain product") {
  Rng rng(3);
  const CovarianceMatrix a = random_cm(1, rng);
  const CovarianceMatrix b = random_cm(1, rng);
  const auto [cm, dec] = product_noise_compose(a, b, Matrix::Zero(4, 4));
  CHECK((cm.entries() - direct_sum(a.entries(), b.entries()))
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK(dec.noise_eigs.size() == 0);
}

TEST_CASE("splitting a thermal beam reproduces the coherent-mixture CM") {
  const double sigma2 = 1.0;
  Matrix p = Matrix::Zero(4, 4);
  // x_A <-> x_B and p_A <-> p_B fully correlated classical noise.
  for (int i : {0, 2}) {
    for (int j : {0, 2}) {
      p(i, j) = sigma2;
      p(i + 1, j + 1) = sigma2;
    }
  }
  const auto [cm, dec] = product_noise_compose(CovarianceMatrix::vacuum(1),
                                               CovarianceMatrix::vacuum(1), p);
  const CovarianceMatrix expect = coherent_mixture_cm(sigma2);
  CHECK((cm.entries() - expect.entries()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK(dec.noise_eigs.size() == 2);
}

TEST_CASE("diagonal noise composes to a bona fide CM with a valid record") {
  Vector diag(4);
  diag << 0.3, 0.1, 0.2, 0.4;
  const Matrix p = diag.asDiagonal();
  const auto [cm, dec] = product_noise_compose(CovarianceMatrix::vacuum(1),
                                               CovarianceMatrix::vacuum(1), p);
  CHECK(is_bona_fide(cm.entries()));
  const Matrix rebuilt =
      dec.noise_basis * dec.noise_eigs.asDiagonal() * dec.noise_basis.transpose();
  CHECK((rebuilt - p).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((cm.entries() -
         direct_sum(dec.gamma_a.entries(), dec.gamma_b.entries()) - dec.noise)
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("indefinite noise is rejected") {
  Matrix p = Matrix::Identity(4, 4);
  p(3, 3) = -0.2;
  CHECK_THROWS_AS(product_noise_compose(CovarianceMatrix::vacuum(1),
                                        CovarianceMatrix::vacuum(1), p),
                  NotPSD);
}

TEST_CASE("composed separable CMs always pass the PPT test") {
  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [cm, dec] =
        product_noise_compose(random_cm(1, rng), random_cm(1, rng),
                              random_psd(4, rng));
    CHECK(ppt_separability(cm).verdict == Separability::Separable);
  }
}

TEST_SUITE_END();
