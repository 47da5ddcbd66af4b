#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cvact/activation.hpp"
#include "cvact/gaussian.hpp"
#include "cvact/negativity.hpp"
#include "cvact/random.hpp"

namespace py = pybind11;
using namespace cvact;

namespace {

CovarianceMatrix cm_from_array(const Matrix& entries) {
  return CovarianceMatrix(entries);
}

py::array_t<std::complex<double>> elements_array(
    const TruncatedDensityMatrix& tdm) {
  const int d1 = tdm.cutoff() + 1;
  py::array_t<std::complex<double>> arr({d1, d1, d1, d1});
  std::copy(tdm.elements().begin(), tdm.elements().end(),
            arr.mutable_data());
  return arr;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum correlations of two-mode Gaussian states";

  py::register_exception<Error>(m, "CvactError");

  py::class_<StandardFormParams>(m, "StandardFormParams")
      .def(py::init<double, double, double, double>(), py::arg("a"),
           py::arg("b"), py::arg("c1"), py::arg("c2"))
      .def_readwrite("a", &StandardFormParams::a)
      .def_readwrite("b", &StandardFormParams::b)
      .def_readwrite("c1", &StandardFormParams::c1)
      .def_readwrite("c2", &StandardFormParams::c2)
      .def_static("tmsv", &StandardFormParams::tmsv, py::arg("r"))
      .def_static("coherent_mixture", &StandardFormParams::coherent_mixture,
                  py::arg("sigma2"))
      .def("__repr__", [](const StandardFormParams& p) {
        return "StandardFormParams(a=" + std::to_string(p.a) +
               ", b=" + std::to_string(p.b) + ", c1=" + std::to_string(p.c1) +
               ", c2=" + std::to_string(p.c2) + ")";
      });

  py::class_<NegativityResult>(m, "NegativityResult")
      .def_readonly("value", &NegativityResult::value)
      .def_readonly("cutoff_used", &NegativityResult::cutoff_used)
      .def_readonly("tail_estimate", &NegativityResult::tail_estimate)
      .def_readonly("converged", &NegativityResult::converged)
      .def("__repr__", [](const NegativityResult& r) {
        return "NegativityResult(value=" + std::to_string(r.value) +
               ", cutoff_used=" + std::to_string(r.cutoff_used) +
               ", converged=" + (r.converged ? std::string("True") : "False") +
               ")";
      });

  m.def(
      "assemble_standard_form",
      [](double a, double b, double c1, double c2) {
        return assemble_standard_form({a, b, c1, c2}).entries();
      },
      py::arg("a"), py::arg("b"), py::arg("c1"), py::arg("c2"),
      "Standard-form CM as a 4x4 array; raises CvactError if unphysical.");

  m.def(
      "standard_form_invariants",
      [](const Matrix& cm) {
        const auto p = standard_form_invariants(cm_from_array(cm));
        return py::make_tuple(p.a, p.b, p.c1, p.c2);
      },
      py::arg("cm"), "(a, b, c1, c2) of a two-mode CM, convention c1 >= |c2|.");

  m.def("is_symplectic", &is_symplectic, py::arg("s"), py::arg("tol") = 1e-10);

  m.def(
      "ppt_separability",
      [](const Matrix& cm) {
        const auto res = ppt_separability(cm_from_array(cm));
        return py::make_tuple(res.verdict == Separability::Separable,
                              res.min_pt_symplectic_eig);
      },
      py::arg("cm"),
      "(separable, min PT symplectic eigenvalue) for a two-mode CM.");

  m.def(
      "is_classical",
      [](const Matrix& cm, const std::vector<int>& modes_a, double tol) {
        return is_classical(cm_from_array(cm), modes_a, tol);
      },
      py::arg("cm"), py::arg("modes_a") = std::vector<int>{0},
      py::arg("tol") = 1e-10);

  m.def(
      "conditional_state",
      [](const Matrix& cm, const std::vector<int>& measured, const Matrix& meas,
         const Vector& outcome) {
        const auto st = conditional_state(cm_from_array(cm), measured,
                                          cm_from_array(meas), outcome);
        return py::make_tuple(st.cm.entries(), st.mean);
      },
      py::arg("cm"), py::arg("measured_modes"), py::arg("meas_cm"),
      py::arg("outcome"), "(sigma, d_k) after a Gaussian measurement.");

  m.def(
      "commutator_char_fn",
      [](const Matrix& cm, const Matrix& meas, const Vector& k,
         const Vector& kp, const Vector& xi) {
        return commutator_char_fn(cm_from_array(cm), cm_from_array(meas), k,
                                  kp, xi);
      },
      py::arg("cm"), py::arg("meas_cm"), py::arg("outcome_k"),
      py::arg("outcome_kp"), py::arg("xi"));

  m.def(
      "product_noise_compose",
      [](const Matrix& ga, const Matrix& gb, const Matrix& noise) {
        auto [cm, dec] =
            product_noise_compose(cm_from_array(ga), cm_from_array(gb), noise);
        return py::make_tuple(cm.entries(), dec.noise_eigs, dec.noise_basis);
      },
      py::arg("gamma_a"), py::arg("gamma_b"), py::arg("noise"),
      "(composed CM, positive noise eigenvalues, eigenvector columns).");

  m.def(
      "build_r_matrix",
      [](const Matrix& cm) {
        const RMatrix r = build_r_matrix(cm_from_array(cm));
        return py::make_tuple(r.entries, r.det_factor);
      },
      py::arg("cm"), "(R, det(gamma + 1/2)) of a two-mode CM.");

  m.def(
      "fock_elements",
      [](const Matrix& cm, int cutoff) {
        const auto tdm = fock_elements(cm_from_array(cm), cutoff);
        return py::make_tuple(elements_array(tdm), tdm.trace_deficit());
      },
      py::arg("cm"), py::arg("cutoff"),
      "(elements[m1, m2, n1, n2], trace_deficit) at the given cutoff.");

  m.def(
      "husimi_at",
      [](const Matrix& cm, std::complex<double> a1, std::complex<double> a2) {
        return husimi_at(cm_from_array(cm), a1, a2);
      },
      py::arg("cm"), py::arg("alpha1"), py::arg("alpha2"));

  m.def(
      "negativity_truncated",
      [](const Matrix& cm, double tol, int max_cutoff) {
        return negativity_truncated(cm_from_array(cm), tol, max_cutoff);
      },
      py::arg("cm"), py::arg("tol") = 1e-8, py::arg("max_cutoff") = 36);

  m.def("negativity_pure", &negativity_pure, py::arg("r"));
  m.def("negativity_coherent_mixture", &negativity_coherent_mixture,
        py::arg("sigma2"), py::arg("terms") = 800);

  m.def(
      "lower_bound",
      [](const Matrix& cm) {
        const auto res = lower_bound(cm_from_array(cm));
        return py::make_tuple(res.lower_bound, res.husimi_value);
      },
      py::arg("cm"), "(lower bound, (pi e)^2 Phi(1,1)) of a two-mode CM.");

  m.def(
      "activation_negativity_dense",
      [](const Matrix& cm, int cutoff) {
        return negativity_oracle_dense(
            protocol_output(fock_elements(cm_from_array(cm), cutoff)));
      },
      py::arg("cm"), py::arg("cutoff"),
      "Dense partial-transpose negativity of the protocol output.");

  m.def(
      "faithfulness_check",
      [](const Matrix& cm, double tol) {
        return faithfulness_check(cm_from_array(cm), tol) ==
                       FaithfulnessVerdict::ClassicalSeparableOutput
                   ? "ClassicalSeparableOutput"
                   : "NonclassicalEntangledOutput";
      },
      py::arg("cm"), py::arg("tol") = 1e-8);

  m.def(
      "run_nogo_trials",
      [](int trials, std::uint64_t seed) {
        Rng rng(seed);
        int passes = 0;
        double worst = 1e300;
        for (int i = 0; i < trials; ++i) {
          const auto out = nogo_run(NoGoScenario::random(rng));
          worst = std::min(worst, out.certificate.min_residual_eig);
          if (out.min_pt_symplectic_eig >= 0.5 - 1e-9 &&
              out.certificate.min_residual_eig >= -1e-10) {
            ++passes;
          }
        }
        return py::make_tuple(passes, worst);
      },
      py::arg("trials"), py::arg("seed"),
      "(passes, min certificate residual eigenvalue) over seeded scenarios.");

  m.def(
      "bound_extrema",
      [](const std::string& family) {
        const Family f = family == "pure" ? Family::Pure
                                          : Family::CoherentMixture;
        const auto res = bound_extrema(f);
        return py::make_tuple(res.argmax_nbar, res.max_value,
                              res.zero_crossing_nbar);
      },
      py::arg("family"),
      "(argmax nbar, max value, zero crossing) of the closed-form bound.");

  m.attr("__version__") = "0.1.0";
}
