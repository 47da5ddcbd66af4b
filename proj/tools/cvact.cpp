// cvact: Gaussian-state quantum-correlation calculator.
//
// Subcommands: negativity, sweep, classify, nogo-demo, bound-extrema,
// fock-element. All numeric output uses 12 significant digits with the C
// locale. Exit codes: 0 success, 1 input/validation error, 2 computation not
// converged, 3 failed no-go trial.

#include <atomic>
#include <clocale>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cvact/activation.hpp"
#include "cvact/io.hpp"
#include "cvact/negativity.hpp"
#include "cvact/random.hpp"

namespace {

using namespace cvact;
using cvact::io::format_sig;

struct SweepRow {
  double nbar;
  NegativityResult neg;
  double bound;
  double closed_form;  // pure family only
};

struct SweepSpec {
  Family family;
  double nbar_min;
  double nbar_max;
  int steps;
  double tol;
  int max_cutoff;
  std::string output_path;

  void validate() const {
    if (nbar_min < 0.0 || nbar_min >= nbar_max || steps < 2) {
      throw Error("sweep needs 0 <= nbar-min < nbar-max and steps >= 2");
    }
  }
};

// Evaluates f(0..n-1) on a small pool; results land by index, so the output
// order never depends on scheduling.
template <typename F>
void parallel_for_indexed(int n, F&& f) {
  const unsigned hw = std::thread::hardware_concurrency();
  if (hw <= 1 || n < 4) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i; (i = next.fetch_add(1)) < n;) f(i);
  };
  std::vector<std::thread> pool;
  const unsigned count = std::min<unsigned>(hw, static_cast<unsigned>(n));
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

Family parse_family(const std::string& name) {
  if (name == "pure") return Family::Pure;
  if (name == "coherent-mixture") return Family::CoherentMixture;
  if (name == "standard-form-grid") return Family::StandardFormGrid;
  throw Error("unknown family: " + name);
}

int cmd_negativity(double a, double b, double c1, double c2, double tol,
                   int max_cutoff) {
  const CovarianceMatrix cm = assemble_standard_form({a, b, c1, c2});
  const NegativityResult res = negativity_truncated(cm, tol, max_cutoff);
  std::cout << "value " << format_sig(res.value) << "\n"
            << "cutoff_used " << res.cutoff_used << "\n"
            << "tail_estimate " << format_sig(res.tail_estimate) << "\n"
            << "converged " << (res.converged ? "true" : "false") << "\n";
  return res.converged ? 0 : 2;
}

int cmd_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<SweepRow> rows(spec.steps);
  parallel_for_indexed(spec.steps, [&](int i) {
    const double nbar = spec.nbar_min + (spec.nbar_max - spec.nbar_min) * i /
                                            double(spec.steps - 1);
    const CovarianceMatrix cm =
        assemble_standard_form(family_params(spec.family, nbar));
    SweepRow row;
    row.nbar = nbar;
    row.neg = negativity_truncated(cm, spec.tol, spec.max_cutoff);
    row.bound = lower_bound(cm).lower_bound;
    row.closed_form =
        spec.family == Family::Pure ? negativity_pure_nbar(nbar) : 0.0;
    rows[i] = row;
  });

  std::ofstream out(spec.output_path);
  if (!out) throw Error("cannot open " + spec.output_path + " for writing");
  out << "nbar,negativity,lower_bound,cutoff_used,converged";
  if (spec.family == Family::Pure) out << ",closed_form";
  out << "\n";
  for (const SweepRow& row : rows) {
    out << format_sig(row.nbar) << "," << format_sig(row.neg.value) << ","
        << format_sig(row.bound) << "," << row.neg.cutoff_used << ","
        << (row.neg.converged ? "true" : "false");
    if (spec.family == Family::Pure) out << "," << format_sig(row.closed_form);
    out << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& path) {
  const CovarianceMatrix cm = io::read_cm_file(path);
  if (cm.modes() != 2) throw ParseError("classify expects a two-mode CM");
  if (is_classical(cm, {0})) {
    std::cout << "Classical\n";
  } else if (ppt_separability(cm).verdict == Separability::Entangled) {
    std::cout << "Entangled\n";
  } else {
    std::cout << "SeparableNonclassical\n";
  }
  return 0;
}

int cmd_nogo_demo(int trials, std::uint64_t seed, const std::string& out_path,
                  const std::string& emit_path, const std::string& scenario_path) {
  std::vector<NoGoScenario> scenarios;
  if (!scenario_path.empty()) {
    scenarios = io::read_scenarios_file(scenario_path);
  } else {
    Rng rng(seed);
    scenarios.reserve(trials);
    for (int i = 0; i < trials; ++i) scenarios.push_back(NoGoScenario::random(rng));
  }
  if (!emit_path.empty()) io::write_scenarios_file(emit_path, scenarios);

  std::ofstream csv;
  if (!out_path.empty()) {
    csv.open(out_path);
    if (!csv) throw Error("cannot open " + out_path + " for writing");
    csv << "trial,residual_min_eig,pt_min_symplectic_eig,pass\n";
  }

  int passes = 0;
  double worst_residual = 1e300;
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    bool pass = true;
    double residual_eig = 0.0;
    double pt_nu = 0.0;
    try {
      const NoGoOutcome outcome = nogo_run(scenarios[i]);
      residual_eig = outcome.certificate.min_residual_eig;
      pt_nu = outcome.min_pt_symplectic_eig;
      pass = pt_nu >= 0.5 - 1e-9;
    } catch (const CertificateFailed& e) {
      pass = false;
      std::cerr << "trial " << i << ": " << e.what() << "\n";
    }
    passes += pass ? 1 : 0;
    worst_residual = std::min(worst_residual, residual_eig);
    if (csv.is_open()) {
      csv << i << "," << format_sig(residual_eig) << "," << format_sig(pt_nu)
          << "," << (pass ? "true" : "false") << "\n";
    }
  }
  std::cout << "trials " << scenarios.size() << "\n"
            << "passes " << passes << "\n"
            << "failures " << (scenarios.size() - passes) << "\n"
            << "min_residual_eig " << format_sig(worst_residual) << "\n";
  return passes == static_cast<int>(scenarios.size()) ? 0 : 3;
}

int cmd_bound_extrema(const std::string& family_name) {
  const ExtremaResult res = bound_extrema(parse_family(family_name));
  std::cout << "argmax_nbar " << format_sig(res.argmax_nbar) << "\n"
            << "max_value " << format_sig(res.max_value) << "\n"
            << "zero_crossing_nbar " << format_sig(res.zero_crossing_nbar)
            << "\n";
  return 0;
}

int cmd_fock_element(double a, double b, double c1, double c2,
                     const std::string& in_path, int cutoff,
                     const std::vector<int>& index,
                     const std::string& out_path) {
  const CovarianceMatrix cm = in_path.empty()
                                  ? assemble_standard_form({a, b, c1, c2})
                                  : io::read_cm_file(in_path);
  const TruncatedDensityMatrix tdm = fock_elements(cm, cutoff);
  if (!index.empty()) {
    const auto v = tdm(index[0], index[1], index[2], index[3]);
    std::cout << format_sig(v.real()) << " " << format_sig(v.imag()) << "\n";
    return 0;
  }
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw Error("cannot open " + out_path + " for writing");
    out = &file;
  }
  *out << "m1,m2,n1,n2,re,im\n";
  for (int m1 = 0; m1 <= cutoff; ++m1)
    for (int m2 = 0; m2 <= cutoff; ++m2)
      for (int n1 = 0; n1 <= cutoff; ++n1)
        for (int n2 = 0; n2 <= cutoff; ++n2) {
          const auto v = tdm(m1, m2, n1, n2);
          *out << m1 << "," << m2 << "," << n1 << "," << n2 << ","
               << format_sig(v.real()) << "," << format_sig(v.imag()) << "\n";
        }
  std::cout << "trace_deficit " << format_sig(tdm.trace_deficit()) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  CLI::App app{"Quantum correlations of two-mode Gaussian states"};
  app.require_subcommand(1);

  double a = 0.5, b = 0.5, c1 = 0.0, c2 = 0.0;
  double tol = 1e-8;
  int max_cutoff = 36;
  double nbar_min = 0.0, nbar_max = 1.0;
  int steps = 11;
  std::string family = "pure";
  std::string out_path, in_path, emit_path, scenario_path;
  int trials = 100;
  std::uint64_t seed = 1;
  int cutoff = 8;
  std::vector<int> index;

  auto* neg = app.add_subcommand("negativity",
                                 "Truncated output negativity of a standard-form state");
  neg->add_option("--a", a)->required();
  neg->add_option("--b", b)->required();
  neg->add_option("--c1", c1)->required();
  neg->add_option("--c2", c2)->required();
  neg->add_option("--tol", tol);
  neg->add_option("--max-cutoff", max_cutoff);

  auto* sweep = app.add_subcommand("sweep", "Family sweep to CSV");
  sweep->add_option("--family", family)->required();
  sweep->add_option("--nbar-min", nbar_min)->required();
  sweep->add_option("--nbar-max", nbar_max)->required();
  sweep->add_option("--steps", steps)->required();
  sweep->add_option("--tol", tol);
  sweep->add_option("--max-cutoff", max_cutoff);
  sweep->add_option("--out", out_path)->required();

  auto* classify = app.add_subcommand("classify", "Classify a CM file");
  classify->add_option("--in", in_path)->required();

  auto* nogo = app.add_subcommand("nogo-demo",
                                  "Seeded no-activation certificate sweep");
  nogo->add_option("--trials", trials);
  nogo->add_option("--seed", seed);
  nogo->add_option("--out", out_path);
  nogo->add_option("--emit-scenarios", emit_path);
  nogo->add_option("--scenario", scenario_path);

  auto* extrema = app.add_subcommand("bound-extrema",
                                     "Extrema of the closed-form lower bound");
  extrema->add_option("--family", family)->required();

  auto* fock = app.add_subcommand("fock-element", "Fock-basis elements");
  fock->add_option("--a", a);
  fock->add_option("--b", b);
  fock->add_option("--c1", c1);
  fock->add_option("--c2", c2);
  fock->add_option("--in", in_path);
  fock->add_option("--cutoff", cutoff);
  fock->add_option("--index", index, "m1 m2 n1 n2 of a single element")
      ->expected(4);
  fock->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (neg->parsed()) return cmd_negativity(a, b, c1, c2, tol, max_cutoff);
    if (sweep->parsed()) {
      return cmd_sweep({parse_family(family), nbar_min, nbar_max, steps, tol,
                        max_cutoff, out_path});
    }
    if (classify->parsed()) return cmd_classify(in_path);
    if (nogo->parsed()) {
      return cmd_nogo_demo(trials, seed, out_path, emit_path, scenario_path);
    }
    if (extrema->parsed()) return cmd_bound_extrema(family);
    if (fock->parsed()) {
      return cmd_fock_element(a, b, c1, c2, in_path, cutoff, index, out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
