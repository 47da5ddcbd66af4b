// End-to-end checks of the cvact binary: exit codes, printed values, CSV
// determinism. The binary path arrives through the CVACT_BIN environment
// variable set by CTest.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cvact/covariance.hpp"
#include "cvact/io.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
};

std::string binary_path() {
  const char* env = std::getenv("CVACT_BIN");
  return env ? env : "";
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "cvact_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const fs::path out_file = scratch_dir() / "stdout.txt";
  const std::string cmd =
      binary_path() + " " + args + " > " + out_file.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(raw), ss.str()};
}

double parse_field(const std::string& out, const std::string& key) {
  std::istringstream in(out);
  std::string k;
  std::string v;
  while (in >> k >> v) {
    if (k == key) return std::stod(v);
  }
  FAIL("missing field ", key, " in output:\n", out);
  return 0.0;
}

std::vector<std::string> read_lines(const fs::path& p) {
  std::ifstream in(p);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("binary path is configured") { REQUIRE_FALSE(binary_path().empty()); }

TEST_CASE("negativity subcommand values and exit codes") {
  SUBCASE("vacuum") {
    const auto res = run("negativity --a 0.5 --b 0.5 --c1 0 --c2 0");
    CHECK(res.exit_code == 0);
    CHECK(parse_field(res.out, "value") == doctest::Approx(0.0));
  }
  SUBCASE("TMSV r = 0.5") {
    const double ch = 0.5 * std::cosh(1.0);
    const double sh = 0.5 * std::sinh(1.0);
    std::ostringstream cmd;
    cmd.precision(17);
    cmd << "negativity --a " << ch << " --b " << ch << " --c1 " << sh
        << " --c2 " << -sh;
    const auto res = run(cmd.str());
    CHECK(res.exit_code == 0);
    CHECK(parse_field(res.out, "value") ==
          doctest::Approx(0.859141).epsilon(1e-5));
  }
  SUBCASE("coherent mixture sigma2 = 1 matches the series") {
    const auto res =
        run("negativity --a 1.5 --b 1.5 --c1 1 --c2 1 --tol 1e-6 --max-cutoff 48");
    CHECK(res.exit_code == 0);
    CHECK(parse_field(res.out, "value") ==
          doctest::Approx(0.840844610259).epsilon(1e-6));
  }
  SUBCASE("unphysical parameters exit 1") {
    const auto res = run("negativity --a 0.5 --b 0.5 --c1 0.4 --c2 0");
    CHECK(res.exit_code == 1);
  }
  SUBCASE("not converged exits 2") {
    const double ch = 0.5 * std::cosh(1.0);
    const double sh = 0.5 * std::sinh(1.0);
    std::ostringstream cmd;
    cmd.precision(17);
    cmd << "negativity --a " << ch << " --b " << ch << " --c1 " << sh
        << " --c2 " << -sh << " --tol 1e-12 --max-cutoff 4";
    const auto res = run(cmd.str());
    CHECK(res.exit_code == 2);
    CHECK(res.out.find("converged false") != std::string::npos);
  }
}

TEST_CASE("sweep CSV: closed form, determinism, row count") {
  const fs::path csv1 = scratch_dir() / "sweep1.csv";
  const fs::path csv2 = scratch_dir() / "sweep2.csv";
  const std::string spec =
      "sweep --family pure --nbar-min 0 --nbar-max 1 --steps 11 --tol 1e-8 "
      "--max-cutoff 36 --out ";
  CHECK(run(spec + csv1.string()).exit_code == 0);
  CHECK(run(spec + csv2.string()).exit_code == 0);
  CHECK(slurp(csv1) == slurp(csv2));

  const auto lines = read_lines(csv1);
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] == "nbar,negativity,lower_bound,cutoff_used,converged,closed_form");
  double prev = -1.0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 6);
    const double neg = std::stod(fields[1]);
    const double closed = std::stod(fields[5]);
    CHECK(neg == doctest::Approx(closed).epsilon(1e-4));
    CHECK(neg > prev);  // strictly increasing in nbar
    prev = neg;
    CHECK(std::stod(fields[2]) <= neg + 1e-9);  // bound below value
  }

  const fs::path csv3 = scratch_dir() / "sweep3.csv";
  CHECK(run("sweep --family coherent-mixture --nbar-min 0 --nbar-max 0.05 "
            "--steps 2 --out " +
            csv3.string())
            .exit_code == 0);
  CHECK(read_lines(csv3).size() == 3);  // header + 2 rows
}

TEST_CASE("classify subcommand") {
  using namespace cvact;
  const fs::path dir = scratch_dir();

  const fs::path vac = dir / "vacuum.cm";
  io::write_cm_file(vac.string(), CovarianceMatrix::vacuum(2));
  auto res = run("classify --in " + vac.string());
  CHECK(res.exit_code == 0);
  CHECK(res.out == "Classical\n");

  const fs::path mix = dir / "mixture.cm";
  io::write_cm_file(mix.string(),
                    assemble_standard_form(StandardFormParams::coherent_mixture(1.0)));
  res = run("classify --in " + mix.string());
  CHECK(res.exit_code == 0);
  CHECK(res.out == "SeparableNonclassical\n");

  const fs::path tmsv = dir / "tmsv.cm";
  io::write_cm_file(tmsv.string(),
                    assemble_standard_form(StandardFormParams::tmsv(0.5)));
  res = run("classify --in " + tmsv.string());
  CHECK(res.exit_code == 0);
  CHECK(res.out == "Entangled\n");

  const fs::path bad = dir / "bad.cm";
  std::ofstream(bad) << "2\n1 2 3\n";
  CHECK(run("classify --in " + bad.string()).exit_code == 1);
  CHECK(run("classify --in " + (dir / "missing.cm").string()).exit_code == 1);
}

TEST_CASE("nogo-demo subcommand") {
  SUBCASE("seeded trials pass and are deterministic") {
    const fs::path csv1 = scratch_dir() / "nogo1.csv";
    const fs::path csv2 = scratch_dir() / "nogo2.csv";
    auto res = run("nogo-demo --trials 25 --seed 42 --out " + csv1.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("passes 25") != std::string::npos);
    CHECK(res.out.find("failures 0") != std::string::npos);
    res = run("nogo-demo --trials 25 --seed 42 --out " + csv2.string());
    CHECK(res.exit_code == 0);
    CHECK(slurp(csv1) == slurp(csv2));
    CHECK(read_lines(csv1).size() == 26);
  }
  SUBCASE("scenario files round-trip") {
    const fs::path sc = scratch_dir() / "scenarios.json";
    auto res = run("nogo-demo --trials 3 --seed 7 --emit-scenarios " + sc.string());
    CHECK(res.exit_code == 0);
    REQUIRE(fs::exists(sc));
    res = run("nogo-demo --scenario " + sc.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("trials 3") != std::string::npos);
    CHECK(res.out.find("passes 3") != std::string::npos);
  }
  SUBCASE("a certificate failure exits 3") {
    using namespace cvact;
    Rng rng(5);
    NoGoScenario sc = NoGoScenario::random(rng);
    // Non-swap global map without a baseline certificate cannot certify.
    sc.s_global = SymplecticMap::beam_splitter(4, 0, 2, 0.3);
    const fs::path path = scratch_dir() / "bad_scenario.json";
    io::write_scenarios_file(path.string(), {sc});
    const auto res = run("nogo-demo --scenario " + path.string());
    CHECK(res.exit_code == 3);
    CHECK(res.out.find("failures 1") != std::string::npos);
  }
}

TEST_CASE("sweep rejects invalid specifications") {
  const fs::path csv = scratch_dir() / "never.csv";
  CHECK(run("sweep --family pure --nbar-min 0 --nbar-max 1 --steps 1 --out " +
            csv.string())
            .exit_code == 1);
  CHECK(run("sweep --family pure --nbar-min 1 --nbar-max 0.5 --steps 5 --out " +
            csv.string())
            .exit_code == 1);
  CHECK(run("sweep --family unknown --nbar-min 0 --nbar-max 1 --steps 5 --out " +
            csv.string())
            .exit_code == 1);
}

TEST_CASE("bound-extrema subcommand") {
  auto res = run("bound-extrema --family pure");
  CHECK(res.exit_code == 0);
  CHECK(parse_field(res.out, "argmax_nbar") ==
        doctest::Approx(0.618034).epsilon(1e-4));
  CHECK(parse_field(res.out, "zero_crossing_nbar") ==
        doctest::Approx(5.253399).epsilon(1e-4));

  res = run("bound-extrema --family coherent-mixture");
  CHECK(res.exit_code == 0);
  CHECK(parse_field(res.out, "argmax_nbar") ==
        doctest::Approx(0.5).epsilon(1e-4));
  CHECK(parse_field(res.out, "zero_crossing_nbar") ==
        doctest::Approx(1.960777).epsilon(1e-4));
}

TEST_CASE("fock-element subcommand") {
  SUBCASE("single element of the coherent mixture") {
    const auto res = run(
        "fock-element --a 1.5 --b 1.5 --c1 1 --c2 1 --cutoff 4 --index 1 0 0 1");
    CHECK(res.exit_code == 0);
    std::istringstream in(res.out);
    double re = 0.0, im = 0.0;
    in >> re >> im;
    CHECK(re == doctest::Approx(1.0 / 9.0).epsilon(1e-10));
    CHECK(im == doctest::Approx(0.0));
  }
  SUBCASE("CSV dump") {
    const fs::path csv = scratch_dir() / "fock.csv";
    const auto res = run("fock-element --a 0.5 --b 0.5 --c1 0 --c2 0 --cutoff 2 --out " +
                         csv.string());
    CHECK(res.exit_code == 0);
    const auto lines = read_lines(csv);
    REQUIRE(lines.size() == 82);  // header + 3^4 rows
    CHECK(lines[0] == "m1,m2,n1,n2,re,im");
    CHECK(lines[1] == "0,0,0,0,1,0");
  }
}

TEST_SUITE_END();
