#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cvact/activation.hpp"
#include "cvact/covariance.hpp"

namespace cvact::io {

/// Locale-independent "%.*g" formatting, 12 significant digits by default.
std::string format_sig(double value, int digits = 12);

/// CM text format: first line is the mode count L, then 2L rows of 2L
/// whitespace-separated reals.
CovarianceMatrix read_cm(std::istream& in);
CovarianceMatrix read_cm_file(const std::string& path);
void write_cm(std::ostream& out, const CovarianceMatrix& cm);
void write_cm_file(const std::string& path, const CovarianceMatrix& cm);

/// Scenario files are JSON: matrices gamma_a, gamma_b, noise, s_a, s_b,
/// s_global, gamma_ancilla under a "cvact-scenario-v1" format tag; a file
/// holds either one scenario object or an array of them.
std::vector<NoGoScenario> read_scenarios_file(const std::string& path);
void write_scenarios_file(const std::string& path,
                          const std::vector<NoGoScenario>& scenarios);

}  // namespace cvact::io
