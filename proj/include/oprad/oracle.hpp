// Independent brute-force and sampling verifiers: exhaustive gamma/lambda
// grids for the geometry decisions, direct sampling of the defining
// supremum for radii, the Buzano inequality check, and seeded random
// matrix generators for the property suites.

#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "oprad/geometry.hpp"
#include "oprad/radius.hpp"
#include "oprad/types.hpp"

namespace oprad {

struct GridSpec {
  int radial_points = 64;
  int angular_points = 128;
  double radius_bound = 0.0;  // 0 = auto: 2 w_rho(A) / w_rho(B)
};

struct OracleVerdict {
  bool agrees = false;
  double oracle_value = 0.0;
  double main_value = 0.0;
  double discrepancy = 0.0;
  bool oracle_decision = false;
  bool main_decision = false;
  double combined_tolerance = 0.0;
};

// Minimum of w_rho(A + gamma B) over a polar grid of the disk
// |gamma| <= radius_bound; within the grid's resolution bound
// w_rho(B) * cell_radius of the true convex minimum. Throws on B = 0.
std::pair<Complex, double> grid_min_gamma(const ComplexMatrix& a,
                                          const ComplexMatrix& b,
                                          const RhoParam& rho,
                                          const GridSpec& grid = {});

// Maximum of w_rho(A + lambda B) over equispaced unimodular lambda; within
// w_rho(B) * pi / angular_points of the true maximum.
std::pair<Complex, double> grid_max_lambda(const ComplexMatrix& a,
                                           const ComplexMatrix& b,
                                           const RhoParam& rho,
                                           int angular_points = 720);

// Largest grid-cell distance to the nearest gamma grid point, times the
// objective's Lipschitz constant w_rho(B): the documented error budget of
// grid_min_gamma.
double grid_resolution_bound(const GridSpec& grid, double radius_bound,
                             double w_rho_b);

// Monotone lower bound on w(T): best of `samples` random unit starts, each
// improved by accept-if-better steps z <- normalize((e^{-i phi} T + e^{i phi} T*) z / 2)
// with phi = arg <Tz, z>.
double sphere_radius_estimate(const ComplexMatrix& t, int samples,
                              int refine_steps, std::uint64_t seed = 12345);

// |<Ay,x><x,By>| <= (||Ay|| ||By|| + |<Ay,By>|) / 2 for unit x, within 1e-10
// slack. A false return signals an arithmetic bug somewhere.
bool buzano_check(const ComplexMatrix& a, const ComplexMatrix& b,
                  const ComplexVector& x, const ComplexVector& y);

enum class CheckMode { orthogonal, parallel };

// Runs the geometry decider and the corresponding grid oracle (the gamma
// grid is followed by a deterministic zoom so the oracle's resolution term
// does not dominate the agreement band). agrees = booleans match and the
// values differ by at most decider tolerance + oracle resolution bound.
OracleVerdict cross_check(const ComplexMatrix& a, const ComplexMatrix& b,
                          const RhoParam& rho, CheckMode mode,
                          const GridSpec& grid = {});

// ---- seeded random generation -------------------------------------------

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double gaussian() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  Complex complex_gaussian() {  // CN(0,1)
    return Complex(gaussian(), gaussian()) * std::sqrt(0.5);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

ComplexMatrix random_matrix(std::size_t n, Rng& rng);
ComplexMatrix random_unitary(std::size_t n, Rng& rng);
ComplexMatrix random_normal_matrix(std::size_t n, Rng& rng);
// Strictly upper 2x2 block form conjugated by a random unitary; requires n >= 2.
ComplexMatrix random_two_nilpotent(std::size_t n, Rng& rng);
ComplexVector random_unit_vector(std::size_t n, Rng& rng);

}  // namespace oprad
