#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "oprad/matrix_io.hpp"
#include "oprad/oracle.hpp"

using namespace oprad;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/oprad_cli_stdout.txt";
  const std::string cmd = std::string(OPRADIUS_BIN) + " " + args + " > " +
                          out_path + " 2> /tmp/oprad_cli_stderr.txt";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string write_matrix(const std::string& name, const ComplexMatrix& m,
                         const std::string& label = "") {
  const std::string path = "/tmp/oprad_cli_" + name + ".json";
  write_matrix_file(path, m, label);
  return path;
}

}  // namespace

TEST_CASE("radius command: closed-form values and exit codes") {
  const std::string nil =
      write_matrix("nil", ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}, "nilpotent");
  const std::string id = write_matrix("id", ComplexMatrix::identity(2));

  SUBCASE("nilpotent at rho 0.5 gives 2") {
    const RunResult r = run_cli("radius " + nil + " --rho 0.5");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "radius");
    CHECK(std::abs(j["result"]["radius"].get<double>() - 2.0) <= 1e-8);
    CHECK(j["inputs"][0]["label"] == "nilpotent");
  }
  SUBCASE("identity at rho 1 gives 1") {
    const RunResult r = run_cli("radius " + id + " --rho 1.0");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["result"]["radius"].get<double>() - 1.0) <= 1e-8);
  }
  SUBCASE("identity at rho 0.5 gives 3") {
    const RunResult r = run_cli("radius " + id + " --rho 0.5");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["result"]["radius"].get<double>() - 3.0) <= 1e-8);
  }
  SUBCASE("malformed file exits 2 and names the field") {
    std::ofstream bad("/tmp/oprad_cli_bad.json");
    bad << R"({"n": 2, "entries": [[0, 0]]})";
    bad.close();
    const RunResult r = run_cli("radius /tmp/oprad_cli_bad.json");
    CHECK(r.exit_code == 2);
  }
  SUBCASE("invalid rho exits 3") {
    CHECK(run_cli("radius " + id + " --rho 2.5").exit_code == 3);
    CHECK(run_cli("radius " + id + " --rho 0.0001").exit_code == 3);
  }
}

TEST_CASE("orthogonal command: decision exit codes") {
  const std::string d = write_matrix(
      "diagpm", ComplexMatrix::diagonal({Complex(1, 0), Complex(-1, 0)}));
  const std::string id = write_matrix("id2", ComplexMatrix::identity(2));
  const std::string id3 = write_matrix("id3", ComplexMatrix::identity(3));

  SUBCASE("orthogonal pair exits 0") {
    const RunResult r = run_cli("orthogonal " + d + " " + id + " --rho 1.0");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["orthogonal"] == true);
    CHECK(j["result"]["witnesses"].size() >= 14);
  }
  SUBCASE("A vs A exits 1") {
    const RunResult r = run_cli("orthogonal " + d + " " + d + " --rho 2.0");
    CHECK(r.exit_code == 1);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["orthogonal"] == false);
  }
  SUBCASE("dimension mismatch exits 4") {
    CHECK(run_cli("orthogonal " + d + " " + id3).exit_code == 4);
  }
  SUBCASE("cross-check embeds an agreeing oracle verdict") {
    const RunResult r = run_cli("orthogonal " + d + " " + id +
                                " --rho 1.0 --cross-check --grid-radial 16 "
                                "--grid-angular 32");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.contains("oracle"));
    CHECK(j["oracle"]["agrees"] == true);
  }
}

TEST_CASE("parallel command") {
  Rng rng(199);
  const ComplexMatrix a = random_matrix(2, rng);
  const std::string pa = write_matrix("a", a);
  const std::string p2a = write_matrix("two_a", Complex(2.0, 0.0) * a);
  const std::string d1 = write_matrix(
      "d10", ComplexMatrix::diagonal({Complex(1, 0), Complex(0, 0)}));
  const std::string d2 = write_matrix(
      "d01", ComplexMatrix::diagonal({Complex(0, 0), Complex(1, 0)}));

  SUBCASE("A vs 2A exits 0 with lambda* = 1") {
    const RunResult r = run_cli("parallel " + pa + " " + p2a + " --rho 1.5");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["parallel"] == true);
    CHECK(std::abs(j["result"]["lambda_star"][0].get<double>() - 1.0) <= 1e-6);
  }
  SUBCASE("disjoint supports exit 1") {
    const RunResult r = run_cli("parallel " + d1 + " " + d2 + " --rho 1.0");
    CHECK(r.exit_code == 1);
  }
  SUBCASE("malformed JSON exits 2") {
    std::ofstream bad("/tmp/oprad_cli_garble.json");
    bad << "{";
    bad.close();
    CHECK(run_cli("parallel /tmp/oprad_cli_garble.json " + pa).exit_code == 2);
  }
}

TEST_CASE("selftest command") {
  SUBCASE("small deterministic run passes") {
    const RunResult r = run_cli("selftest --seed 42 --trials 2");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"]["all_passed"] == true);
  }
  SUBCASE("zero trials exits 3") {
    CHECK(run_cli("selftest --trials 0").exit_code == 3);
  }
  SUBCASE("byte-identical reruns") {
    const RunResult r1 = run_cli("selftest --seed 7 --trials 1");
    const RunResult r2 = run_cli("selftest --seed 7 --trials 1");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);
  }
}

TEST_CASE("determinism of analysis commands") {
  const std::string d = write_matrix(
      "det_diag", ComplexMatrix::diagonal({Complex(1, 0), Complex(-1, 0)}));
  const std::string id = write_matrix("det_id", ComplexMatrix::identity(2));
  const RunResult r1 = run_cli("orthogonal " + d + " " + id + " --rho 1.0");
  const RunResult r2 = run_cli("orthogonal " + d + " " + id + " --rho 1.0");
  CHECK(r1.out == r2.out);
}
