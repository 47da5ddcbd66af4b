#include "cvact/negativity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace cvact {

namespace {

constexpr double kE = 2.71828182845904523536;
constexpr double kPi = 3.14159265358979323846;

struct LadderStep {
  double abs_sum;
  double trace_deficit;
};

LadderStep evaluate_cutoff(const RMatrix& r, int cutoff) {
  HermiteTable table(r, cutoff);
  const double inv_sqrt_det = 1.0 / std::sqrt(r.det_factor);
  double abs_sum = 0.0;
  for (const auto& v : table.values()) abs_sum += std::abs(v);
  abs_sum *= inv_sqrt_det;
  double trace = 0.0;
  for (int m1 = 0; m1 <= cutoff; ++m1) {
    for (int m2 = 0; m2 <= cutoff; ++m2) {
      trace += table.scaled(m1, m2, m1, m2).real();
    }
  }
  trace *= inv_sqrt_det;
  return {abs_sum, 1.0 - trace};
}

double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double tol) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

double bisect_zero(const std::function<double(double)>& f, double lo,
                   double hi, double tol) {
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((flo > 0.0) == (fm > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

NegativityResult negativity_truncated(const CovarianceMatrix& cm, double tol,
                                      int max_cutoff) {
  const RMatrix r = build_r_matrix(cm);
  // The d = 0 step is measured against the exact trace 1, so a state that is
  // vacuum-like to within tol converges immediately.
  double prev_sum = 1.0;
  double increment = 0.0;
  LadderStep step{1.0, 0.0};
  int cutoff = 0;
  bool converged = false;
  std::vector<int> ladder;
  for (int d = 0; d <= max_cutoff; d += 4) ladder.push_back(d);
  if (ladder.back() != max_cutoff) ladder.push_back(max_cutoff);

  double tail = 0.0;
  for (int d : ladder) {
    cutoff = d;
    step = evaluate_cutoff(r, d);
    increment = step.abs_sum - prev_sum;
    prev_sum = step.abs_sum;
    tail = std::max(0.0, increment) + std::max(0.0, step.trace_deficit);
    // Converged once the increment and the trace deficit jointly fit in tol,
    // so the reported tail estimate never exceeds the requested tolerance.
    if (tail <= tol) {
      converged = true;
      break;
    }
  }
  const double value = std::max(0.0, 0.5 * (step.abs_sum - 1.0));
  return {value, cutoff, tail, converged};
}

double negativity_pure(double r) { return 0.5 * (std::exp(2.0 * r) - 1.0); }

double negativity_coherent_mixture(double sigma2, int terms) {
  if (sigma2 < 0.0) throw Error("sigma2 must be non-negative");
  if (sigma2 == 0.0) return 0.0;
  // 1/s(M) = sigma^{2M} / (1 + 2 sigma^2)^{M+1}; binomials via log-gamma.
  const double log_s2 = std::log(sigma2);
  const double log_denom = std::log1p(2.0 * sigma2);
  double total = 0.0;
  double prev_term = 0.0;
  for (int m = 0; m < terms; ++m) {
    double inner = 0.0;
    const double lg_m = std::lgamma(m + 1.0);
    for (int j = 0; j <= m; ++j) {
      inner += std::exp(
          0.5 * (lg_m - std::lgamma(j + 1.0) - std::lgamma(m - j + 1.0)));
    }
    const double term =
        std::exp(m * log_s2 - (m + 1) * log_denom + 2.0 * std::log(inner));
    total += term;
    if (m >= 2 && term < prev_term) {
      const double ratio = term / prev_term;
      if (term * ratio / (1.0 - ratio) < 1e-10) {
        return 0.5 * (total - 1.0);
      }
    }
    prev_term = term;
  }
  throw SeriesNotConverged("coherent-mixture series did not converge within " +
                           std::to_string(terms) + " terms");
}

BoundResult lower_bound(const CovarianceMatrix& cm) {
  const double husimi =
      kPi * kPi * kE * kE * husimi_at(cm, {1.0, 0.0}, {1.0, 0.0});
  return {0.5 * (husimi - 1.0), husimi};
}

double l1_norm(const TruncatedDensityMatrix& tdm) {
  double sum = 0.0;
  for (const auto& v : tdm.elements()) sum += std::abs(v);
  return sum;
}

double l1_shortcut_negativity(const TruncatedDensityMatrix& tdm) {
  return 0.5 * (l1_norm(tdm) - 1.0);
}

StandardFormParams family_params(Family family, double nbar) {
  if (nbar < 0.0) throw Error("nbar must be non-negative");
  switch (family) {
    case Family::Pure:
      return StandardFormParams::tmsv(std::asinh(std::sqrt(nbar)));
    case Family::CoherentMixture:
      return StandardFormParams::coherent_mixture(nbar);
    case Family::StandardFormGrid: {
      const double c = 0.5 * std::sqrt(nbar * (nbar + 1.0));
      return {nbar + 0.5, nbar + 0.5, c, -c};
    }
  }
  throw Error("unknown family");
}

double bound_pure_nbar(double nbar) {
  const double r = std::asinh(std::sqrt(nbar));
  const double cosh_r = std::cosh(r);
  return 0.5 * (std::exp(2.0 * std::tanh(r)) / (cosh_r * cosh_r) - 1.0);
}

double bound_mixture_nbar(double nbar) {
  return 0.5 * (std::exp(4.0 * nbar / (2.0 * nbar + 1.0)) / (2.0 * nbar + 1.0) -
                1.0);
}

double negativity_pure_nbar(double nbar) {
  return negativity_pure(std::asinh(std::sqrt(nbar)));
}

ExtremaResult bound_extrema(Family family) {
  std::function<double(double)> bound;
  switch (family) {
    case Family::Pure:
      bound = bound_pure_nbar;
      break;
    case Family::CoherentMixture:
      bound = bound_mixture_nbar;
      break;
    default:
      throw Error("bound_extrema: no closed-form bound for this family");
  }
  const double argmax = golden_section_max(bound, 0.0, 50.0, 1e-8);
  const double max_value = bound(argmax);
  const double zero = bisect_zero(bound, argmax, 1000.0, 1e-8);
  return {argmax, max_value, zero};
}

}  // namespace cvact
