// Drives the workbench binary end to end: exit codes, CSV shape,
// determinism, config-file handling.

#include <doctest.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(WORKBENCH_BIN) + " " + args + " 2>&1";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

TEST_CASE("partners: rows satisfy v_minus - v_plus = 2 W'") {
  const auto r = run_cli("partners --w linear:1,0 --xmin -2 --xmax 2 -n 32");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() >= 33);  // header + 32 nodes
  CHECK(rows[0] == std::vector<std::string>{"x", "v_plus", "v_minus"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double vp = std::stod(rows[i][1]);
    const double vm = std::stod(rows[i][2]);
    CHECK(std::abs(vm - vp - 2.0) < 1e-12);
  }
}

TEST_CASE("partners: singular family auto-selects the half line") {
  const auto r = run_cli("partners --w linear_inverse:0,1,-1,0 -n 16");
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(std::stod(rows[i][0]) > 0.0);
}

TEST_CASE("partners: malformed family string exits 2 and names the field") {
  const auto r = run_cli("partners --w linear:oops");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("slope_half") != std::string::npos);

  const auto r2 = run_cli("partners --w warp:1,2");
  CHECK(r2.exit_code == 2);
  CHECK(r2.out.find("family") != std::string::npos);
}

TEST_CASE("spectrum: harmonic levels with a header and spacing trailer") {
  const auto r = run_cli("spectrum --potential ho -m 3 -n 1200");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n,eigenvalue,residual\n") != std::string::npos);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  for (int n = 0; n < 3; ++n)
    CHECK(std::abs(std::stod(rows[static_cast<std::size_t>(n + 1)][1]) -
                   (2.0 * n + 1.0)) < 1e-2);
}

TEST_CASE("spectrum: isochronous pair with pairing report") {
  const auto r =
      run_cli("spectrum --pair isochronous:z=-1 --check-pairing -m 4 -n 1200");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# member=plus") != std::string::npos);
  CHECK(r.out.find("# member=minus") != std::string::npos);
  CHECK(r.out.find("# pairing: pass") != std::string::npos);
  CHECK(r.out.find("zero mode on plus side") != std::string::npos);
}

TEST_CASE("spectrum: urabe well has a finite spectrum and spacing report") {
  const auto r = run_cli("spectrum --potential urabe:zeta=1,omega=2 -m 3 -n 900");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# spacing:") != std::string::npos);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(std::stod(rows[i][1]) > 0.0);
}

TEST_CASE("spectrum output is byte-identical across runs") {
  const auto a = run_cli("spectrum --pair linear:1,0 -m 4 -n 800");
  const auto b = run_cli("spectrum --pair linear:1,0 -m 4 -n 800");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("quasi: constant scalar reports a hard zero residual") {
  const auto r = run_cli("quasi --S const:0 --gamma 0 --delta perfect_square");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("offdiagonal_residual: 0\n") != std::string::npos);
}

TEST_CASE("quasi: linear scalar residual equals max |S'|") {
  const auto r = run_cli("quasi --S linear:1 --gamma 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("offdiagonal_residual: 1\n") != std::string::npos);
}

TEST_CASE("quasi --convergence prints a fitted order of at least 1.9") {
  const auto r = run_cli("quasi --convergence");
  CHECK(r.exit_code == 0);
  const auto pos = r.out.find("fitted_order: ");
  REQUIRE(pos != std::string::npos);
  std::stringstream ss(r.out.substr(pos + 14));
  double o1 = 0.0, o2 = 0.0;
  ss >> o1 >> o2;
  CHECK(o1 >= 1.9);
  CHECK(o2 >= 1.9);
}

TEST_CASE("planar: linear field reduction with Dirac energy map") {
  const auto r = run_cli("planar --A linear:1,0 --k 0 --vF 2 -m 3 -n 1200");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# zero_mode_side=plus") != std::string::npos);
  CHECK(r.out.find("# offdiagonal_residual=0") != std::string::npos);
  CHECK(r.out.find("n,E_plus,E_minus") != std::string::npos);
  // E_1 = vF * sqrt(2) with vF = 2.
  const auto pos = r.out.find("n,E_plus,E_minus");
  const auto rows = parse_csv(r.out.substr(pos));
  REQUIRE(rows.size() >= 3);
  CHECK(std::abs(std::stod(rows[2][1]) - 2.0 * std::sqrt(2.0)) < 1e-2);
  CHECK(std::stod(rows[2][2]) == doctest::Approx(-std::stod(rows[2][1])));
}

TEST_CASE("planar: free field reports an empty discrete spectrum") {
  const auto r = run_cli(
      "planar --A isotonic:1,1,1,0 --k 0 -m 2 -n 400");
  CHECK(r.exit_code == 0);
  // Confining case sanity: this one does have a spectrum.
  CHECK(r.out.find("# member=plus") != std::string::npos);
}

TEST_CASE("verify-paper subset runs and emits JSON") {
  const auto r = run_cli("verify-paper --only isotonic-matching --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"all_passed\": true") != std::string::npos);
  CHECK(r.out.find("isotonic-matching") != std::string::npos);
  CHECK(r.out.find("numerical-oracle") != std::string::npos);
}

TEST_CASE("config file drives a run and flags override it") {
  const std::string path = "/tmp/workbench_cfg_test.json";
  {
    std::ofstream cfg(path);
    cfg << R"({
      "command": "spectrum",
      "grid": {"a": -12.0, "b": 12.0, "n": 900, "m": 2},
      "params": {"potential": {"family": "isotonic",
                               "params": {"omega_cap": 2.0, "eta": 1.0}}},
      "output": ""
    })";
  }
  const auto r = run_cli("--config " + path);
  CHECK(r.exit_code == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 3);  // header + 2 levels

  // A flag wins over the file's grid block.
  const auto r2 = run_cli("--config " + path + " spectrum --potential ho -m 3 -n 700");
  CHECK(r2.exit_code == 0);
  const auto rows2 = parse_csv(r2.out);
  REQUIRE(rows2.size() == 4);
  CHECK(std::abs(std::stod(rows2[1][1]) - 1.0) < 1e-2);
  std::remove(path.c_str());
}

TEST_CASE("missing command and unreadable config exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--config /nonexistent.json spectrum --potential ho")
            .exit_code == 2);
  CHECK(run_cli("spectrum").exit_code == 2);  // neither --potential nor --pair
}
