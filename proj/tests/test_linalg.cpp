#include "doctest.h"

#include <cmath>

#include "oprad/linalg.hpp"
#include "oprad/oracle.hpp"

using namespace oprad;

namespace {
const Complex I{0.0, 1.0};
}

TEST_CASE("adjoint is the conjugate transpose") {
  const ComplexMatrix a{{0.0, 1.0}, {0.0, 0.0}};
  const ComplexMatrix at = adjoint(a);
  CHECK(at(0, 0) == Complex(0.0, 0.0));
  CHECK(at(0, 1) == Complex(0.0, 0.0));
  CHECK(at(1, 0) == Complex(1.0, 0.0));
  CHECK(at(1, 1) == Complex(0.0, 0.0));

  const ComplexMatrix m{{I}};
  CHECK(adjoint(m)(0, 0) == -I);

  const ComplexMatrix h{{Complex(2.0, 0.0), Complex(1.0, 3.0)},
                        {Complex(1.0, -3.0), Complex(-1.0, 0.0)}};
  const ComplexMatrix hh = adjoint(h);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(hh(i, j) == h(i, j));
}

TEST_CASE("adjoint is an involution on random matrices") {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix a = random_matrix(2 + t % 5, rng);
    CHECK(frobenius_norm(adjoint(adjoint(a)) - a) == 0.0);
    CHECK(std::abs(operator_norm(adjoint(a)) - operator_norm(a)) <= 1e-10);
  }
}

TEST_CASE("inner product basics") {
  const ComplexVector e1 = ComplexVector::unit(2, 0);
  const ComplexVector e2 = ComplexVector::unit(2, 1);
  CHECK(inner(e1, e1) == Complex(1.0, 0.0));
  CHECK(inner(e1, e2) == Complex(0.0, 0.0));

  const ComplexVector v{Complex(1.0, 0.0), I};
  CHECK(inner(v, v) == Complex(2.0, 0.0));

  CHECK_THROWS_AS(inner(e1, ComplexVector::unit(3, 0)), dimension_error);
}

TEST_CASE("inner product is conjugate symmetric and positive") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const ComplexVector u = random_unit_vector(4, rng);
    const ComplexVector v = random_unit_vector(4, rng);
    const Complex a = inner(u, v);
    const Complex b = inner(v, u);
    CHECK(std::abs(a - std::conj(b)) <= 1e-14);
    CHECK(inner(u, u).real() >= 0.0);
    CHECK(std::abs(inner(u, u).imag()) <= 1e-15);
  }
}

TEST_CASE("hermitian_eig_max on fixed matrices") {
  SUBCASE("identity") {
    const EigenPair p = hermitian_eig_max(ComplexMatrix::identity(2));
    CHECK(p.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.vector.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("diag(2,5)") {
    const EigenPair p = hermitian_eig_max(
        ComplexMatrix::diagonal({Complex(2.0, 0.0), Complex(5.0, 0.0)}));
    CHECK(p.value == doctest::Approx(5.0).epsilon(1e-13));
    CHECK(std::abs(p.vector[1]) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("pauli-x") {
    const ComplexMatrix x{{0.0, 1.0}, {1.0, 0.0}};
    const EigenPair p = hermitian_eig_max(x);
    CHECK(p.value == doctest::Approx(1.0).epsilon(1e-13));
    // eigenvector is (e1+e2)/sqrt(2) up to phase
    CHECK(std::abs(p.vector[0]) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
    CHECK(std::abs(p.vector[1]) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
  }
  SUBCASE("rejects non-square and non-Hermitian") {
    CHECK_THROWS_AS(hermitian_eig_max(ComplexMatrix(1, 2, {I, I})),
                    dimension_error);
    CHECK_THROWS_AS(hermitian_eig_max(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}),
                    value_error);
  }
}

TEST_CASE("hermitian eigensolver residual and Rayleigh bound") {
  Rng rng(13);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 2 + t % 7;
    const ComplexMatrix g = random_matrix(n, rng);
    const ComplexMatrix h = Complex(0.5, 0.0) * (g + adjoint(g));
    const EigenPair top = hermitian_eig_max(h);

    std::vector<Complex> res(n);
    const ComplexVector hv = h * top.vector;
    for (std::size_t i = 0; i < n; ++i)
      res[i] = hv[i] - top.value * top.vector[i];
    CHECK(ComplexVector(res).norm() <= 1e-10 * (1.0 + operator_norm(h)));

    for (int k = 0; k < 100; ++k) {
      const ComplexVector v = random_unit_vector(n, rng);
      CHECK(top.value + 1e-10 >= inner(h * v, v).real());
    }
  }
}

TEST_CASE("full eigendecomposition reconstructs the matrix") {
  Rng rng(17);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 2 + t % 5;
    const ComplexMatrix g = random_matrix(n, rng);
    const ComplexMatrix h = Complex(0.5, 0.0) * (g + adjoint(g));
    const HermitianEigenResult r = hermitian_eigs(h);

    // orthonormality
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Complex ip = inner(r.vectors[i], r.vectors[j]);
        CHECK(std::abs(ip - (i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0))) <=
              1e-11);
      }

    // H = sum_k lambda_k v_k v_k*
    ComplexMatrix rec = ComplexMatrix::zero(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          rec(i, j) += r.values[k] * r.vectors[k][i] *
                       std::conj(r.vectors[k][j]);
    CHECK(frobenius_norm(rec - h) <= 1e-10 * (1.0 + frobenius_norm(h)));
  }
}

TEST_CASE("operator_norm fixed values") {
  CHECK(operator_norm(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(operator_norm(ComplexMatrix::diagonal({Complex(3.0, 0.0),
                                               Complex(0.0, 4.0)})) ==
        doctest::Approx(4.0).epsilon(1e-12));
  CHECK(operator_norm(ComplexMatrix{{1.0, 1.0}, {1.0, 1.0}}) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(operator_norm(ComplexMatrix::zero(3)) == 0.0);
}

TEST_CASE("operator_norm is a unitarily invariant norm") {
  Rng rng(19);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 2 + t % 7;
    const ComplexMatrix a = random_matrix(n, rng);
    const ComplexMatrix b = random_matrix(n, rng);
    const Complex c = rng.complex_gaussian();

    CHECK(operator_norm(a + b) <=
          operator_norm(a) + operator_norm(b) + 1e-9);
    CHECK(std::abs(operator_norm(c * a) - std::abs(c) * operator_norm(a)) <=
          1e-9);

    const ComplexMatrix u = random_unitary(n, rng);
    CHECK(std::abs(operator_norm(adjoint(u) * a * u) - operator_norm(a)) <=
          1e-9);
  }
}

TEST_CASE("max_singular_subspace") {
  SUBCASE("degenerate pair of singular values") {
    const auto basis = max_singular_subspace(
        ComplexMatrix::diagonal({Complex(1.0, 0.0), Complex(-1.0, 0.0)}));
    CHECK(basis.size() == 2);
  }
  SUBCASE("simple top singular value") {
    const auto basis = max_singular_subspace(
        ComplexMatrix::diagonal({Complex(2.0, 0.0), Complex(1.0, 0.0)}));
    REQUIRE(basis.size() == 1);
    CHECK(std::abs(basis[0][0]) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("nilpotent: Az maximal at z = e2") {
    const auto basis =
        max_singular_subspace(ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}});
    REQUIRE(basis.size() == 1);
    CHECK(std::abs(basis[0][1]) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("zero matrix rejected") {
    CHECK_THROWS_AS(max_singular_subspace(ComplexMatrix::zero(2)),
                    value_error);
  }
  SUBCASE("returned vectors nearly attain the norm") {
    Rng rng(23);
    for (int t = 0; t < 15; ++t) {
      const ComplexMatrix a = random_matrix(2 + t % 5, rng);
      const double nrm = operator_norm(a);
      for (const ComplexVector& z : max_singular_subspace(a, 1e-8))
        CHECK((a * z).norm() >= (1.0 - 1e-8) * nrm);
    }
  }
}

TEST_CASE("type invariants rejected at construction") {
  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)),
                  dimension_error);
  CHECK_THROWS_AS(
      ComplexMatrix(1, 1, {Complex(std::nan(""), 0.0)}), value_error);
  CHECK_THROWS_AS(ComplexVector(std::vector<Complex>{}), dimension_error);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(ComplexVector{Complex(inf, 0.0)}, value_error);
}
