#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "oprad/matrix_io.hpp"
#include "oprad/oracle.hpp"

using namespace oprad;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/oprad_io_" + name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("matrix file round trip") {
  Rng rng(191);
  const ComplexMatrix a = random_matrix(3, rng);
  const std::string path = "/tmp/oprad_io_roundtrip.json";
  write_matrix_file(path, a, "probe");
  const MatrixFile mf = read_matrix_file(path);
  CHECK(mf.label == "probe");
  REQUIRE(mf.matrix.rows() == 3);
  CHECK(frobenius_norm(mf.matrix - a) == 0.0);
  std::remove(path.c_str());
}

TEST_CASE("matrix file errors name the offending field") {
  SUBCASE("missing n") {
    TempFile f("no_n.json", R"({"entries": []})");
    CHECK_THROWS_WITH_AS(read_matrix_file(f.path),
                         doctest::Contains("'n'"), matrix_file_error);
  }
  SUBCASE("bad entries length") {
    TempFile f("short.json", R"({"n": 2, "entries": [[1, 0]]})");
    CHECK_THROWS_WITH_AS(read_matrix_file(f.path),
                         doctest::Contains("entries"), matrix_file_error);
  }
  SUBCASE("entry not a pair") {
    TempFile f("pair.json", R"({"n": 1, "entries": [[1, 0, 3]]})");
    CHECK_THROWS_AS(read_matrix_file(f.path), matrix_file_error);
  }
  SUBCASE("invalid JSON") {
    TempFile f("garbled.json", "{nope");
    CHECK_THROWS_AS(read_matrix_file(f.path), matrix_file_error);
  }
  SUBCASE("nonpositive n") {
    TempFile f("neg.json", R"({"n": 0, "entries": []})");
    CHECK_THROWS_WITH_AS(read_matrix_file(f.path),
                         doctest::Contains("positive"), matrix_file_error);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_matrix_file("/tmp/oprad_does_not_exist.json"),
                    matrix_file_error);
  }
}

TEST_CASE("report serialization carries every field") {
  Rng rng(193);
  const ComplexMatrix a = random_matrix(2, rng);
  const RhoParam rho(1.25);

  SUBCASE("radius certificate") {
    const Json j = to_json(rho_radius(a, rho));
    CHECK(j.contains("radius"));
    CHECK(j.contains("theta_star"));
    CHECK(j.contains("attaining_vector"));
    CHECK(j.contains("residual"));
    CHECK(j["attaining_vector"].size() == 4);  // stacked block witness
  }
  SUBCASE("orthogonality report") {
    const Json j = to_json(is_orthogonal(a, a, rho));
    CHECK(j["orthogonal"] == false);
    CHECK(j.contains("base_radius"));
    CHECK(j.contains("min_value"));
    CHECK(j.contains("gamma_star"));
    CHECK(j.contains("witnesses"));
    CHECK(j.contains("tolerance"));
  }
  SUBCASE("parallelism report with witnesses") {
    const Json j = to_json(is_parallel(a, Complex(2, 0) * a, rho));
    CHECK(j["parallel"] == true);
    REQUIRE(j["witnesses"].size() >= 1);
    CHECK(j["witnesses"][0].contains("x"));
    CHECK(j["witnesses"][0].contains("y"));
    CHECK(j["witnesses"][0].contains("sign_or_product_residual"));
  }
  SUBCASE("reduced witness form drops x") {
    const Json j = to_json(numerical_radius_parallel(a, Complex(2, 0) * a),
                           /*reduced=*/true);
    REQUIRE(j["witnesses"].size() >= 1);
    CHECK(!j["witnesses"][0].contains("x"));
    CHECK(j["witnesses"][0].contains("y"));
  }
  SUBCASE("selftest report") {
    const Json j = to_json(run_selftest(7, 1));
    CHECK(j.contains("all_passed"));
    CHECK(j["properties"].size() >= 10);
  }
}
