#include "oprad/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oprad/geometry.hpp"
#include "oprad/oracle.hpp"

namespace oprad {

namespace {

struct PropertyBuilder {
  PropertyResult r;
  explicit PropertyBuilder(std::string name) { r.name = std::move(name); }
  // Records one trial: ok with the measured discrepancy.
  void trial(bool ok, double discrepancy) {
    ++r.trials;
    if (!ok) ++r.failures;
    r.worst_discrepancy = std::max(r.worst_discrepancy, discrepancy);
  }
};

std::size_t small_dim(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.engine()() % (hi - lo + 1));
}

double rho_sample(Rng& rng) { return 0.05 + 1.95 * rng.uniform(); }

}  // namespace

SelfTestReport run_selftest(std::uint64_t seed, int trials) {
  if (trials < 1) throw value_error("selftest: trials must be >= 1");

  SelfTestReport rep;
  rep.seed = seed;
  rep.trials = trials;
  const int heavy = std::max(2, trials / 10);

  {  // adjoint involution and norm invariance under adjoint
    PropertyBuilder p("adjoint-involution-and-norm");
    Rng rng(seed + 11);
    for (int t = 0; t < trials; ++t) {
      const ComplexMatrix a = random_matrix(small_dim(rng, 2, 6), rng);
      const double d1 = frobenius_norm(adjoint(adjoint(a)) - a);
      const double d2 = std::abs(operator_norm(adjoint(a)) - operator_norm(a));
      const double d = std::max(d1, d2);
      p.trial(d <= 1e-10, d);
    }
    rep.properties.push_back(p.r);
  }

  {  // operator norm axioms
    PropertyBuilder p("operator-norm-axioms");
    Rng rng(seed + 12);
    for (int t = 0; t < trials; ++t) {
      const std::size_t n = small_dim(rng, 2, 6);
      const ComplexMatrix a = random_matrix(n, rng);
      const ComplexMatrix b = random_matrix(n, rng);
      const Complex c = rng.complex_gaussian();
      const double tri =
          operator_norm(a + b) - operator_norm(a) - operator_norm(b);
      const double hom =
          std::abs(operator_norm(c * a) - std::abs(c) * operator_norm(a));
      const double d = std::max(tri, hom);
      p.trial(tri <= 1e-9 && hom <= 1e-9, std::max(0.0, d));
    }
    rep.properties.push_back(p.r);
  }

  {  // Rayleigh quotient bound for the top eigenvalue
    PropertyBuilder p("hermitian-rayleigh-bound");
    Rng rng(seed + 13);
    for (int t = 0; t < trials; ++t) {
      const std::size_t n = small_dim(rng, 2, 6);
      const ComplexMatrix g = random_matrix(n, rng);
      const ComplexMatrix h =
          Complex(0.5, 0.0) * (g + adjoint(g));
      const EigenPair top = hermitian_eig_max(h);
      double worst = 0.0;
      for (int k = 0; k < 20; ++k) {
        const ComplexVector v = random_unit_vector(n, rng);
        worst = std::max(worst, inner(h * v, v).real() - top.value);
      }
      p.trial(worst <= 1e-10, std::max(0.0, worst));
    }
    rep.properties.push_back(p.r);
  }

  {  // w_rho norm axioms
    PropertyBuilder p("rho-radius-norm-axioms");
    Rng rng(seed + 14);
    for (int t = 0; t < trials; ++t) {
      const std::size_t n = small_dim(rng, 2, 4);
      const RhoParam rho(rho_sample(rng));
      const ComplexMatrix a = random_matrix(n, rng);
      const ComplexMatrix b = random_matrix(n, rng);
      const Complex c = rng.complex_gaussian();
      const double tri = rho_radius_value(a + b, rho) -
                         rho_radius_value(a, rho) - rho_radius_value(b, rho);
      const double hom = std::abs(rho_radius_value(c * a, rho) -
                                  std::abs(c) * rho_radius_value(a, rho));
      p.trial(tri <= 1e-8 && hom <= 1e-9, std::max(0.0, std::max(tri, hom)));
    }
    rep.properties.push_back(p.r);
  }

  {  // self-adjoint and unitary invariance of w_rho
    PropertyBuilder p("rho-radius-invariance");
    Rng rng(seed + 15);
    for (int t = 0; t < trials; ++t) {
      const std::size_t n = small_dim(rng, 2, 4);
      const RhoParam rho(rho_sample(rng));
      const ComplexMatrix a = random_matrix(n, rng);
      const ComplexMatrix u = random_unitary(n, rng);
      const double w = rho_radius_value(a, rho);
      const double d1 = std::abs(rho_radius_value(adjoint(a), rho) - w);
      const double d2 =
          std::abs(rho_radius_value(adjoint(u) * a * u, rho) - w);
      const double d = std::max(d1, d2);
      p.trial(d <= 1e-8, d);
    }
    rep.properties.push_back(p.r);
  }

  {  // reductions: w_1 = operator norm, w_2 = numerical radius
    PropertyBuilder p("rho-radius-reductions");
    Rng rng(seed + 16);
    for (int t = 0; t < trials; ++t) {
      const std::size_t n = small_dim(rng, 2, 5);
      const ComplexMatrix a = random_matrix(n, rng);
      const double d1 =
          std::abs(rho_radius_value(a, RhoParam(1.0)) - operator_norm(a));
      const double d2 = std::abs(rho_radius_value(a, RhoParam(2.0)) -
                                 numerical_radius_value(a));
      const double d = std::max(d1, d2);
      p.trial(d <= 1e-8, d);
    }
    rep.properties.push_back(p.r);
  }

  {  // sandwich inequality on rho in [1,2]; measured-only below 1
    PropertyBuilder p("rho-radius-sandwich");
    Rng rng(seed + 17);
    double below_one_violation = 0.0;
    for (int t = 0; t < trials; ++t) {
      const std::size_t n = small_dim(rng, 2, 4);
      const ComplexMatrix a = random_matrix(n, rng);
      const double rho_v = 1.0 + rng.uniform();
      const RhoParam rho(rho_v);
      const double w = rho_radius_value(a, rho);
      const double nrm = operator_norm(a);
      const double d =
          std::max(nrm / rho_v - w, w - nrm);
      p.trial(d <= 1e-9, std::max(0.0, d));

      const RhoParam rho_small(0.1 + 0.8 * rng.uniform());
      const double ws = rho_radius_value(a, rho_small);
      below_one_violation =
          std::max(below_one_violation, ws - nrm);
    }
    std::ostringstream note;
    note << "upper sandwich violation for rho<1 (measured, not asserted): "
         << below_one_violation;
    p.r.note = note.str();
    rep.properties.push_back(p.r);
  }

  {  // certificate consistency
    PropertyBuilder p("radius-certificate-consistency");
    Rng rng(seed + 18);
    for (int t = 0; t < trials; ++t) {
      const std::size_t n = small_dim(rng, 2, 4);
      const ComplexMatrix a = random_matrix(n, rng);
      const RhoParam rho(rho_sample(rng));
      const RadiusCertificate c = rho_radius(a, rho);
      const ComplexMatrix block = block_embed(a, rho);
      const double reproduced =
          (2.0 / rho.value()) *
          std::abs(inner(block * c.attaining_vector, c.attaining_vector));
      const double d = std::abs(reproduced - c.radius);
      p.trial(d <= c.residual + 1e-10, d);
    }
    rep.properties.push_back(p.r);
  }

  {  // witness scaling identity between the two displayed vectors
    PropertyBuilder p("witness-vector-identity");
    Rng rng(seed + 19);
    for (int t = 0; t < trials; ++t) {
      const std::size_t n = small_dim(rng, 2, 5);
      const ComplexMatrix a = random_matrix(n, rng);
      const ComplexVector x = random_unit_vector(n, rng);
      const ComplexVector y = random_unit_vector(n, rng);
      const RhoParam rho(rho_sample(rng));
      const double r = rho.value();
      const ComplexVector u = scaled_witness_vector(x, y, rho);
      std::vector<Complex> vd(n);
      for (std::size_t i = 0; i < n; ++i)
        vd[i] = std::sqrt(r * (2.0 - r)) * x[i] + (1.0 - r) * y[i];
      const ComplexVector v(std::move(vd));
      const Complex lhs = inner(a * y, u);
      const Complex rhs = (2.0 / r) * inner(a * y, v);
      const double d = std::abs(lhs - rhs);
      p.trial(d <= 1e-12 * std::max(1.0, std::abs(lhs)), d);
    }
    rep.properties.push_back(p.r);
  }

  {  // decision invariance under adjoint, scaling, unitary conjugation
    PropertyBuilder p("decision-invariance");
    Rng rng(seed + 20);
    for (int t = 0; t < heavy; ++t) {
      const std::size_t n = small_dim(rng, 2, 3);
      const RhoParam rho(rho_sample(rng));
      const ComplexMatrix a = random_matrix(n, rng);
      const ComplexMatrix b = random_matrix(n, rng);
      const ComplexMatrix u = random_unitary(n, rng);
      const Complex alpha = rng.complex_gaussian() + Complex(1.5, 0.0);
      const Complex beta = rng.complex_gaussian() + Complex(1.5, 0.0);
      const double beta_r = 0.5 + rng.uniform();

      const bool o0 = is_orthogonal(a, b, rho).orthogonal;
      const bool oa = is_orthogonal(adjoint(a), adjoint(b), rho).orthogonal;
      const bool os = is_orthogonal(alpha * a, beta * b, rho).orthogonal;
      const bool ou =
          is_orthogonal(adjoint(u) * a * u, adjoint(u) * b * u, rho).orthogonal;

      const bool p0 = is_parallel(a, b, rho).parallel;
      const bool pa = is_parallel(adjoint(a), adjoint(b), rho).parallel;
      const bool ps = is_parallel(Complex(beta_r, 0.0) * a,
                                  Complex(0.5 * beta_r, 0.0) * b, rho)
                          .parallel;
      const bool pu =
          is_parallel(adjoint(u) * a * u, adjoint(u) * b * u, rho).parallel;

      const bool ok = (oa == o0) && (os == o0) && (ou == o0) && (pa == p0) &&
                      (ps == p0) && (pu == p0);
      p.trial(ok, ok ? 0.0 : 1.0);
    }
    rep.properties.push_back(p.r);
  }

  {  // oracle dominance: the grid cannot beat the convex optimizer by more
     // than its resolution
    PropertyBuilder p("oracle-gamma-dominance");
    Rng rng(seed + 21);
    for (int t = 0; t < heavy; ++t) {
      const std::size_t n = small_dim(rng, 2, 3);
      const RhoParam rho(rho_sample(rng));
      const ComplexMatrix a = random_matrix(n, rng);
      const ComplexMatrix b = random_matrix(n, rng);
      GridSpec spec;
      spec.radial_points = 12;
      spec.angular_points = 24;
      const OrthogonalityReport rep_o = is_orthogonal(a, b, rho);
      const auto [gamma, value] = grid_min_gamma(a, b, rho, spec);
      const double radius =
          2.0 * rep_o.base_radius / rho_radius_value(b, rho);
      const double bound =
          grid_resolution_bound(spec, radius, rho_radius_value(b, rho));
      const double d = rep_o.min_value - value;  // grid must not be lower
      const bool ok = value >= rep_o.min_value - 1e-9 &&
                      value <= rep_o.min_value + bound + 1e-9;
      p.trial(ok, std::max(0.0, std::max(-d - 1e-9, d - bound)));
    }
    rep.properties.push_back(p.r);
  }

  {  // lambda grid obeys the triangle inequality
    PropertyBuilder p("oracle-lambda-triangle");
    Rng rng(seed + 22);
    for (int t = 0; t < heavy; ++t) {
      const std::size_t n = small_dim(rng, 2, 3);
      const RhoParam rho(rho_sample(rng));
      const ComplexMatrix a = random_matrix(n, rng);
      const ComplexMatrix b = random_matrix(n, rng);
      const auto [lambda, value] = grid_max_lambda(a, b, rho, 90);
      const double sum =
          rho_radius_value(a, rho) + rho_radius_value(b, rho);
      const double d = value - sum;
      p.trial(d <= 1e-9, std::max(0.0, d));
    }
    rep.properties.push_back(p.r);
  }

  {  // sphere sampling is a lower bound on the numerical radius
    PropertyBuilder p("sphere-estimate-lower-bound");
    Rng rng(seed + 23);
    for (int t = 0; t < heavy; ++t) {
      const std::size_t n = small_dim(rng, 2, 4);
      const ComplexMatrix a = random_matrix(n, rng);
      const double est = sphere_radius_estimate(a, 40, 40, seed + 500 + t);
      const double w = numerical_radius_value(a);
      const double d = est - w;
      p.trial(d <= 1e-9, std::max(0.0, d));
    }
    rep.properties.push_back(p.r);
  }

  {  // Buzano inequality never fails
    PropertyBuilder p("buzano-inequality");
    Rng rng(seed + 24);
    const int count = std::max(trials * 10, 100);
    for (int t = 0; t < count; ++t) {
      const std::size_t n = small_dim(rng, 2, 8);
      const ComplexMatrix a = random_matrix(n, rng);
      const ComplexMatrix b = random_matrix(n, rng);
      const ComplexVector x = random_unit_vector(n, rng);
      ComplexVector y = random_unit_vector(n, rng);
      y = Complex(2.0 * rng.uniform(), 0.0) * y;
      const bool ok = buzano_check(a, b, x, y);
      p.trial(ok, ok ? 0.0 : 1.0);
    }
    rep.properties.push_back(p.r);
  }

  {  // decider vs grid oracle agreement
    PropertyBuilder p("oracle-cross-agreement");
    Rng rng(seed + 25);
    GridSpec spec;
    spec.radial_points = 16;
    spec.angular_points = 32;
    for (int t = 0; t < heavy; ++t) {
      const std::size_t n = small_dim(rng, 2, 3);
      const RhoParam rho(rho_sample(rng));
      const ComplexMatrix a = random_matrix(n, rng);
      const ComplexMatrix b = random_matrix(n, rng);
      const OracleVerdict vo =
          cross_check(a, b, rho, CheckMode::orthogonal, spec);
      const OracleVerdict vp =
          cross_check(a, b, rho, CheckMode::parallel, spec);
      const bool ok = vo.agrees && vp.agrees;
      p.trial(ok, std::max(vo.discrepancy, vp.discrepancy));
    }
    rep.properties.push_back(p.r);
  }

  rep.all_passed = true;
  for (const PropertyResult& r : rep.properties)
    if (r.failures > 0) rep.all_passed = false;
  return rep;
}

}  // namespace oprad
