#include "cvact/activation.hpp"

#include <cmath>

#include "cvact/negativity.hpp"
#include "cvact/random.hpp"

namespace cvact {

namespace {

using Complex = std::complex<double>;

std::size_t pair_index(int d1, int a, int b) {
  return static_cast<std::size_t>(a) * d1 + b;
}

// Basis index of |m1, m2, k1, k2> on the four-mode truncated space.
std::size_t basis_index(int d1, int m1, int m2, int k1, int k2) {
  return ((static_cast<std::size_t>(m1) * d1 + m2) * d1 + k1) * d1 + k2;
}

}  // namespace

FourModeState protocol_output(const TruncatedDensityMatrix& tdm) {
  FourModeState out;
  out.cutoff = tdm.cutoff();
  out.amplitudes = tdm.elements();
  out.trace = tdm.trace();
  const int d1 = tdm.cutoff() + 1;
  const std::size_t dim = static_cast<std::size_t>(d1) * d1 * d1 * d1;
  out.dense_enabled = dim <= static_cast<std::size_t>(kDenseRowCap);
  if (out.dense_enabled) {
    out.dense = ComplexMatrix::Zero(dim, dim);
    for (int m1 = 0; m1 < d1; ++m1) {
      for (int m2 = 0; m2 < d1; ++m2) {
        for (int n1 = 0; n1 < d1; ++n1) {
          for (int n2 = 0; n2 < d1; ++n2) {
            out.dense(basis_index(d1, m1, m2, m1, m2),
                      basis_index(d1, n1, n2, n1, n2)) =
                tdm(m1, m2, n1, n2);
          }
        }
      }
    }
  }
  return out;
}

ComplexMatrix cnot_matrix(int cutoff) {
  const int d1 = cutoff + 1;
  const int dim = d1 * d1;
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  for (int m = 0; m < d1; ++m) {
    for (int n = 0; n < d1; ++n) {
      if (m + n <= cutoff) {
        u(pair_index(d1, m, m + n), pair_index(d1, m, n)) = 1.0;
      }
    }
  }
  return u;
}

double negativity_oracle_dense(const FourModeState& state) {
  if (!state.dense_enabled) {
    throw DenseTooLarge("dense representation not materialized (cutoff too large)");
  }
  const int d1 = state.cutoff + 1;
  const std::size_t dim = static_cast<std::size_t>(d1) * d1 * d1 * d1;
  ComplexMatrix pt = ComplexMatrix::Zero(dim, dim);
  // Partial transpose over AB swaps the system bra/ket indices:
  // <n, m'| rho^T_AB |m, n'> = <m, m'| rho |n, n'>.
  for (int m1 = 0; m1 < d1; ++m1) {
    for (int m2 = 0; m2 < d1; ++m2) {
      for (int n1 = 0; n1 < d1; ++n1) {
        for (int n2 = 0; n2 < d1; ++n2) {
          pt(basis_index(d1, n1, n2, m1, m2), basis_index(d1, m1, m2, n1, n2)) =
              state.amplitudes[((static_cast<std::size_t>(m1) * d1 + m2) * d1 +
                                n1) *
                                   d1 +
                               n2];
        }
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(pt, Eigen::EigenvaluesOnly);
  return 0.5 * (es.eigenvalues().cwiseAbs().sum() - 1.0);
}

SymplecticMap ancilla_swap() {
  return SymplecticMap::mode_permutation({2, 3, 0, 1});
}

NoGoScenario NoGoScenario::random(Rng& rng) {
  const CovarianceMatrix gamma_a = random_cm(1, rng);
  const CovarianceMatrix gamma_b = random_cm(1, rng);
  const Matrix p = random_psd(4, rng);
  auto [composed, decomposition] = product_noise_compose(gamma_a, gamma_b, p);
  (void)composed;
  return NoGoScenario{std::move(decomposition),
                      random_local_symplectic(rng),
                      random_local_symplectic(rng),
                      ancilla_swap(),
                      random_cm(2, rng),
                      std::nullopt};
}

NoGoOutcome nogo_run(const NoGoScenario& scenario) {
  const SymplecticMap locals = SymplecticMap::direct_sum(
      SymplecticMap::direct_sum(scenario.s_a, scenario.s_b),
      SymplecticMap::identity(2));
  const Matrix t = scenario.s_global.entries() * locals.entries();

  const Matrix gamma_product =
      direct_sum(scenario.decomposition.gamma_a.entries(),
                 scenario.decomposition.gamma_b.entries());
  const Matrix gamma_in0 =
      direct_sum(gamma_product, scenario.gamma_ancilla.entries());
  Matrix gamma_out0 = t * gamma_in0 * t.transpose();
  gamma_out0 = 0.5 * (gamma_out0 + gamma_out0.transpose());

  // Relocated classical displacements add the conjugated noise to the CM.
  const Matrix noise_in =
      direct_sum(scenario.decomposition.noise, Matrix::Zero(4, 4));
  Matrix gamma_out = gamma_out0 + t * noise_in * t.transpose();
  gamma_out = 0.5 * (gamma_out + gamma_out.transpose());

  CovarianceMatrix gamma_1 = CovarianceMatrix::vacuum(2);
  CovarianceMatrix gamma_2 = CovarianceMatrix::vacuum(2);
  if (scenario.baseline_certificate) {
    gamma_1 = scenario.baseline_certificate->first;
    gamma_2 = scenario.baseline_certificate->second;
  } else {
    const double swap_dist =
        (scenario.s_global.entries() - ancilla_swap().entries())
            .cwiseAbs()
            .maxCoeff();
    if (swap_dist > 1e-12) {
      throw CertificateFailed(
          "non-swap global map requires an explicit baseline certificate");
    }
    // Swapped output: AB holds the ancilla state, A'B' the transformed locals.
    gamma_1 = scenario.gamma_ancilla;
    gamma_2 = CovarianceMatrix(direct_sum(
        scenario.s_a.apply(scenario.decomposition.gamma_a.entries()),
        scenario.s_b.apply(scenario.decomposition.gamma_b.entries())));
  }

  Matrix residual =
      gamma_out - direct_sum(gamma_1.entries(), gamma_2.entries());
  residual = 0.5 * (residual + residual.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(residual, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -kPsdTol) {
    throw CertificateFailed("certificate residual has eigenvalue " +
                            std::to_string(min_eig));
  }

  CovarianceMatrix out(gamma_out);
  const double pt_nu = min_pt_symplectic_eig(out, {2, 3});
  return {std::move(out), CovarianceMatrix(gamma_out0),
          SeparabilityCertificate{std::move(gamma_1), std::move(gamma_2),
                                  std::move(residual), min_eig},
          pt_nu};
}

Vector nogo_sample_displacement(const NoGoScenario& scenario, Rng& rng) {
  const ProductNoiseDecomposition& dec = scenario.decomposition;
  Vector r(dec.noise_eigs.size());
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    r(i) = std::sqrt(dec.noise_eigs(i)) * rng.normal();
  }
  Vector shift = Vector::Zero(8);
  shift.head(4) =
      direct_sum(scenario.s_a.entries(), scenario.s_b.entries()) *
      (dec.noise_basis * r);
  return scenario.s_global.entries() * shift;
}

FaithfulnessVerdict faithfulness_check(const CovarianceMatrix& cm,
                                       double tol) {
  if (cm.modes() != 2) throw NotTwoModes("faithfulness_check requires two modes");
  const bool classical = is_classical(cm, {0});
  // Standard-form reduction plays the role of the protocol's local unitaries;
  // for a product state it maps to thermal x thermal, which is Fock-diagonal.
  const CovarianceMatrix standard =
      assemble_standard_form(standard_form_invariants(cm));
  const NegativityResult neg =
      negativity_truncated(standard, std::min(tol, 1e-8));
  if (classical) {
    if (neg.value > tol) {
      throw FaithfulnessViolation(
          "classical input produced output negativity " +
          std::to_string(neg.value));
    }
    return FaithfulnessVerdict::ClassicalSeparableOutput;
  }
  if (neg.value <= tol) {
    throw FaithfulnessViolation(
        "nonclassical input produced output negativity " +
        std::to_string(neg.value) + " <= tol");
  }
  return FaithfulnessVerdict::NonclassicalEntangledOutput;
}

}  // namespace cvact
