#include "doctest.h"

#include <cmath>
#include <numbers>

#include "oprad/oracle.hpp"
#include "oprad/radius.hpp"

using namespace oprad;

namespace {

const Complex I{0.0, 1.0};

// Independent dense-grid oracle for w(T): max of lambda_max(H_theta) over a
// fine uniform grid, using only the eigensolver. No golden-section phase, no
// candidate pruning: a plain brute-force sweep.
double grid_radius_oracle(const ComplexMatrix& t, int points = 20000) {
  double best = -1e300;
  for (int i = 0; i < points; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / points;
    best = std::max(best,
                    hermitian_eig_max(detail::hermitian_part(t, theta)).value);
  }
  return best;
}

}  // namespace

TEST_CASE("RhoParam validates its range") {
  CHECK_THROWS_AS(RhoParam(0.0), rho_error);
  CHECK_THROWS_AS(RhoParam(-0.5), rho_error);
  CHECK_THROWS_AS(RhoParam(2.0000001), rho_error);
  CHECK_THROWS_AS(RhoParam(1e-4), rho_error);  // conditioning floor
  CHECK_THROWS_AS(RhoParam(std::nan("")), rho_error);
  CHECK(RhoParam(1e-3).value() == 1e-3);
  CHECK(RhoParam(2.0).value() == 2.0);
}

TEST_CASE("numerical radius fixed values") {
  const ComplexMatrix nil{{0.0, 1.0}, {0.0, 0.0}};
  CHECK(numerical_radius(nil).radius == doctest::Approx(0.5).epsilon(1e-9));

  const ComplexMatrix dg = ComplexMatrix::diagonal({Complex(1, 0), I});
  CHECK(numerical_radius(dg).radius == doctest::Approx(1.0).epsilon(1e-9));

  // lambda_max(H_0) = 1.5 analytically, and w <= w(I) + w(N) = 1.5, so the
  // value is exactly 3/2; the dense-grid oracle agrees.
  const ComplexMatrix jordan{{1.0, 1.0}, {0.0, 1.0}};
  const RadiusCertificate c = numerical_radius(jordan);
  CHECK(c.radius == doctest::Approx(1.5).epsilon(1e-10));
  CHECK(grid_radius_oracle(jordan) == doctest::Approx(c.radius).epsilon(1e-7));

  CHECK_THROWS_AS(numerical_radius(ComplexMatrix(1, 2, {I, I})),
                  dimension_error);
  CHECK_THROWS_AS(numerical_radius(nil, 0.0), value_error);
}

TEST_CASE("numerical radius certificate is self-consistent") {
  Rng rng(31);
  for (int t = 0; t < 12; ++t) {
    const ComplexMatrix a = random_matrix(2 + t % 5, rng);
    const RadiusCertificate c = numerical_radius(a);
    CHECK(c.theta_star >= 0.0);
    CHECK(c.theta_star < 2.0 * std::numbers::pi);
    CHECK(c.attaining_vector.norm() == doctest::Approx(1.0).epsilon(1e-11));
    const double attained =
        std::abs(inner(a * c.attaining_vector, c.attaining_vector));
    CHECK(std::abs(attained - c.radius) <= c.residual + 1e-12);
    CHECK(c.residual <= 1e-9 * std::max(1.0, c.radius));
    // against the dense-grid oracle
    CHECK(grid_radius_oracle(a, 5000) <= c.radius + 1e-8);
  }
}

TEST_CASE("block_embed fixed forms") {
  const ComplexMatrix a{{Complex(1, 2), Complex(0, -1)},
                        {Complex(3, 0), Complex(-2, 1)}};
  SUBCASE("rho = 1: [[0, A], [0, 0]]") {
    const ComplexMatrix t = block_embed(a, RhoParam(1.0));
    REQUIRE(t.rows() == 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        CHECK(t(i, j) == Complex(0, 0));
        CHECK(t(i, 2 + j) == a(i, j));
        CHECK(t(2 + i, j) == Complex(0, 0));
        CHECK(t(2 + i, 2 + j) == Complex(0, 0));
      }
  }
  SUBCASE("rho = 2: [[0, 0], [0, -A]]") {
    const ComplexMatrix t = block_embed(a, RhoParam(2.0));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        CHECK(t(i, 2 + j) == Complex(0, 0));
        CHECK(t(2 + i, 2 + j) == -a(i, j));
      }
  }
  SUBCASE("scalar rho = 0.5") {
    const ComplexMatrix t = block_embed(ComplexMatrix{{1.0}}, RhoParam(0.5));
    REQUIRE(t.rows() == 2);
    CHECK(t(0, 1).real() == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
    CHECK(t(1, 1).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(t(0, 0) == Complex(0, 0));
    CHECK(t(1, 0) == Complex(0, 0));
  }
}

TEST_CASE("rho_radius closed forms") {
  SUBCASE("2-nilpotent: w_rho = ||A|| / rho") {
    const ComplexMatrix a{{0.0, 2.0}, {0.0, 0.0}};
    CHECK(rho_radius(a, RhoParam(0.5)).radius ==
          doctest::Approx(4.0).epsilon(1e-9));
  }
  SUBCASE("normal, rho >= 1: ||A||") {
    const ComplexMatrix d =
        ComplexMatrix::diagonal({Complex(1, 0), Complex(-1, 0)});
    CHECK(rho_radius(d, RhoParam(1.5)).radius ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("normal, rho < 1: (2/rho - 1) ||A||") {
    const ComplexMatrix d =
        ComplexMatrix::diagonal({Complex(1, 0), Complex(-1, 0)});
    CHECK(rho_radius(d, RhoParam(0.5)).radius ==
          doctest::Approx(3.0).epsilon(1e-9));
  }
  SUBCASE("rho = 2 reduces to the numerical radius") {
    Rng rng(5);
    for (int t = 0; t < 6; ++t) {
      const ComplexMatrix a = random_matrix(2 + t % 3, rng);
      CHECK(std::abs(rho_radius(a, RhoParam(2.0)).radius -
                     numerical_radius(a).radius) <= 1e-8);
    }
  }
}

TEST_CASE("rho_radius certificate carries the stacked block witness") {
  Rng rng(37);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 2 + t % 3;
    const ComplexMatrix a = random_matrix(n, rng);
    const RhoParam rho(0.2 + 0.35 * (t % 5));
    const RadiusCertificate c = rho_radius(a, rho);
    REQUIRE(c.attaining_vector.dim() == 2 * n);
    const ComplexMatrix block = block_embed(a, rho);
    const double reproduced =
        (2.0 / rho.value()) *
        std::abs(inner(block * c.attaining_vector, c.attaining_vector));
    CHECK(std::abs(reproduced - c.radius) <= c.residual + 1e-11);
  }
}

TEST_CASE("norm axioms for the rho radius") {
  Rng rng(41);
  for (int t = 0; t < 15; ++t) {
    const std::size_t n = 2 + t % 3;
    const RhoParam rho(0.05 + 1.95 * rng.uniform());
    const ComplexMatrix a = random_matrix(n, rng);
    const ComplexMatrix b = random_matrix(n, rng);
    const Complex c = rng.complex_gaussian();

    CHECK(rho_radius_value(a + b, rho) <=
          rho_radius_value(a, rho) + rho_radius_value(b, rho) + 1e-8);
    CHECK(std::abs(rho_radius_value(c * a, rho) -
                   std::abs(c) * rho_radius_value(a, rho)) <= 1e-9);
  }
}

TEST_CASE("self-adjoint and unitary invariance") {
  Rng rng(43);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 2 + t % 3;
    const RhoParam rho(0.05 + 1.95 * rng.uniform());
    const ComplexMatrix a = random_matrix(n, rng);
    const ComplexMatrix u = random_unitary(n, rng);
    const double w = rho_radius_value(a, rho);
    CHECK(std::abs(rho_radius_value(adjoint(a), rho) - w) <= 1e-8);
    CHECK(std::abs(rho_radius_value(adjoint(u) * a * u, rho) - w) <= 1e-8);
  }
}

TEST_CASE("reduction identities through the block path") {
  Rng rng(47);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 2 + t % 3;
    const ComplexMatrix a = random_matrix(n, rng);
    // public certificates run the full block embedding, so these equalities
    // are genuine cross-path checks
    CHECK(std::abs(rho_radius(a, RhoParam(1.0)).radius - operator_norm(a)) <=
          1e-8);
    CHECK(std::abs(rho_radius(a, RhoParam(2.0)).radius -
                   numerical_radius(a).radius) <= 1e-8);
    // and the fast value path must match the certificate path
    const RhoParam rho(0.05 + 1.95 * rng.uniform());
    CHECK(std::abs(rho_radius_value(a, rho) - rho_radius(a, rho).radius) <=
          1e-10);
  }
}

TEST_CASE("sandwich inequality on rho in [1,2]; measured only below 1") {
  Rng rng(53);
  double below_one_worst = 0.0;
  for (int t = 0; t < 12; ++t) {
    const std::size_t n = 2 + t % 3;
    const ComplexMatrix a = random_matrix(n, rng);
    const double nrm = operator_norm(a);

    const double rho_v = 1.0 + rng.uniform();
    const double w = rho_radius_value(a, RhoParam(rho_v));
    CHECK(w >= nrm / rho_v - 1e-9);
    CHECK(w <= nrm + 1e-9);

    const double rho_small = 0.1 + 0.8 * rng.uniform();
    const double ws = rho_radius_value(a, RhoParam(rho_small));
    below_one_worst = std::max(below_one_worst, ws - nrm);
    CHECK(ws >= nrm / rho_small - 1e-9);  // lower bound holds on (0,2]
  }
  MESSAGE("measured upper-sandwich excess for rho < 1 (not asserted): ",
          below_one_worst);
}

TEST_CASE("attaining_vectors") {
  SUBCASE("nilpotent at rho = 2: |<Ay, y>| = 1/2 for every witness") {
    const ComplexMatrix a{{0.0, 1.0}, {0.0, 0.0}};
    const auto vecs = attaining_vectors(a, RhoParam(2.0));
    REQUIRE(!vecs.empty());
    for (const auto& [theta, z] : vecs) {
      REQUIRE(z.dim() == 4);
      const ComplexVector y{z[2], z[3]};
      CHECK(std::abs(std::abs(inner(a * y, y)) - 0.5) <= 1e-8);
    }
  }
  SUBCASE("diag(1,-1) at rho = 1: witness has ||x|| = ||y|| = 1/sqrt(2)") {
    const ComplexMatrix a =
        ComplexMatrix::diagonal({Complex(1, 0), Complex(-1, 0)});
    const RhoParam rho(1.0);
    const auto vecs = attaining_vectors(a, rho);
    REQUIRE(!vecs.empty());
    const ComplexMatrix block = block_embed(a, rho);
    const double expected_inner = 0.5;  // (rho/2) w_rho = 1/2
    bool balanced = false;
    for (const auto& [theta, z] : vecs) {
      CHECK(std::abs(std::abs(inner(block * z, z)) - expected_inner) <= 1e-8);
      const double nx = std::sqrt(std::norm(z[0]) + std::norm(z[1]));
      const double ny = std::sqrt(std::norm(z[2]) + std::norm(z[3]));
      if (std::abs(nx - std::sqrt(0.5)) < 1e-6 &&
          std::abs(ny - std::sqrt(0.5)) < 1e-6)
        balanced = true;
    }
    CHECK(balanced);
    // sphere-sampling oracle: the attaining value is the supremum
    CHECK(sphere_radius_estimate(block, 300, 60) <= expected_inner + 1e-8);
    CHECK(sphere_radius_estimate(block, 300, 60) >= expected_inner - 1e-5);
  }
  SUBCASE("scalar identity at rho = 1") {
    const ComplexMatrix a{{1.0}};
    const RhoParam rho(1.0);
    const ComplexMatrix block = block_embed(a, rho);
    for (const auto& [theta, z] : attaining_vectors(a, rho))
      CHECK(std::abs(std::abs(inner(block * z, z)) - 0.5) <= 1e-9);
  }
  SUBCASE("zero matrix rejected") {
    CHECK_THROWS_AS(attaining_vectors(ComplexMatrix::zero(2), RhoParam(1.0)),
                    value_error);
  }
}

TEST_CASE("attaining eigenspace values sit within tol of the global max") {
  Rng rng(59);
  for (int t = 0; t < 8; ++t) {
    const ComplexMatrix a = random_matrix(2 + t % 3, rng);
    const RhoParam rho(0.05 + 1.95 * rng.uniform());
    const ComplexMatrix block = block_embed(a, rho);
    const auto sets = attaining_eigenspaces(block, 1e-9);
    REQUIRE(!sets.empty());
    const double w = numerical_radius_value(block);
    for (const AttainingSet& s : sets) {
      CHECK(s.value <= w + 1e-12);
      CHECK(s.value >= w - 1e-9);
      for (const ComplexVector& z : s.basis) {
        CHECK(z.norm() == doctest::Approx(1.0).epsilon(1e-11));
        CHECK(std::abs(std::abs(inner(block * z, z)) - w) <= 1e-8);
      }
    }
  }
}
