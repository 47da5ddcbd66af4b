#include "cvact/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cvact/gaussian.hpp"
#include <json.hpp>

namespace cvact::io {

namespace {

using nlohmann::json;

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& rows, const char* what) {
  if (!rows.is_array() || rows.empty()) {
    throw ParseError(std::string("expected a matrix for ") + what);
  }
  const auto nrows = rows.size();
  const auto ncols = rows.front().size();
  Matrix m(static_cast<Eigen::Index>(nrows), static_cast<Eigen::Index>(ncols));
  for (std::size_t i = 0; i < nrows; ++i) {
    if (!rows[i].is_array() || rows[i].size() != ncols) {
      throw ParseError(std::string("ragged matrix for ") + what);
    }
    for (std::size_t j = 0; j < ncols; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j].get<double>();
    }
  }
  return m;
}

json scenario_to_json(const NoGoScenario& sc) {
  json j;
  j["format"] = "cvact-scenario-v1";
  j["gamma_a"] = matrix_to_json(sc.decomposition.gamma_a.entries());
  j["gamma_b"] = matrix_to_json(sc.decomposition.gamma_b.entries());
  j["noise"] = matrix_to_json(sc.decomposition.noise);
  j["s_a"] = matrix_to_json(sc.s_a.entries());
  j["s_b"] = matrix_to_json(sc.s_b.entries());
  j["s_global"] = matrix_to_json(sc.s_global.entries());
  j["gamma_ancilla"] = matrix_to_json(sc.gamma_ancilla.entries());
  return j;
}

NoGoScenario scenario_from_json(const json& j) {
  if (j.value("format", "") != std::string("cvact-scenario-v1")) {
    throw ParseError("missing or unknown scenario format tag");
  }
  const CovarianceMatrix gamma_a(matrix_from_json(j.at("gamma_a"), "gamma_a"));
  const CovarianceMatrix gamma_b(matrix_from_json(j.at("gamma_b"), "gamma_b"));
  const Matrix noise = matrix_from_json(j.at("noise"), "noise");
  auto [composed, decomposition] =
      product_noise_compose(gamma_a, gamma_b, noise);
  (void)composed;
  return NoGoScenario{
      std::move(decomposition),
      SymplecticMap(matrix_from_json(j.at("s_a"), "s_a")),
      SymplecticMap(matrix_from_json(j.at("s_b"), "s_b")),
      SymplecticMap(matrix_from_json(j.at("s_global"), "s_global")),
      CovarianceMatrix(matrix_from_json(j.at("gamma_ancilla"), "gamma_ancilla")),
      std::nullopt};
}

}  // namespace

std::string format_sig(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return buf;
}

CovarianceMatrix read_cm(std::istream& in) {
  int modes = 0;
  if (!(in >> modes) || modes <= 0) {
    throw ParseError("CM file must start with a positive mode count");
  }
  const int dim = 2 * modes;
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (!(in >> m(i, j))) {
        throw ParseError("CM file truncated at row " + std::to_string(i));
      }
    }
  }
  return CovarianceMatrix(m);
}

CovarianceMatrix read_cm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_cm(in);
}

void write_cm(std::ostream& out, const CovarianceMatrix& cm) {
  out << cm.modes() << "\n";
  for (int i = 0; i < cm.dim(); ++i) {
    for (int j = 0; j < cm.dim(); ++j) {
      if (j) out << " ";
      out << format_sig(cm(i, j), 17);
    }
    out << "\n";
  }
}

void write_cm_file(const std::string& path, const CovarianceMatrix& cm) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  write_cm(out, cm);
}

std::vector<NoGoScenario> read_scenarios_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid scenario JSON: ") + e.what());
  }
  std::vector<NoGoScenario> out;
  try {
    if (j.is_array()) {
      for (const auto& item : j) out.push_back(scenario_from_json(item));
    } else {
      out.push_back(scenario_from_json(j));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid scenario JSON: ") + e.what());
  }
  return out;
}

void write_scenarios_file(const std::string& path,
                          const std::vector<NoGoScenario>& scenarios) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  json arr = json::array();
  for (const auto& sc : scenarios) arr.push_back(scenario_to_json(sc));
  out << arr.dump(2) << "\n";
}

}  // namespace cvact::io
