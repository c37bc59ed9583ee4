// Numerical radius w(A), the rho-radius w_rho(A) computed through the 2x2
// block embedding, and extraction of radius-attaining unit vectors.
//
// w(A) is computed as max over theta of lambda_max(H_theta) where
// H_theta = (e^{i theta} A + e^{-i theta} A*) / 2, and
// w_rho(A) = (2/rho) * w([[0, sqrt(rho(2-rho)) A], [0, (1-rho) A]]).

#pragma once

#include <utility>
#include <vector>

#include "oprad/linalg.hpp"
#include "oprad/types.hpp"

namespace oprad {

// rho in (0, 2]. Values below 1e-3 are rejected as ill-conditioned: w_rho
// grows like 1/rho and the block scaling loses precision there.
class RhoParam {
 public:
  explicit RhoParam(double value);
  double value() const { return value_; }

 private:
  double value_;
};

struct RadiusCertificate {
  double radius = 0.0;
  double theta_star = 0.0;          // in [0, 2pi)
  ComplexVector attaining_vector;   // unit norm
  double residual = 0.0;            // | |<T z, z>| - radius | on the evaluated block
};

RadiusCertificate numerical_radius(const ComplexMatrix& a, double tol = 1e-9);

// [[0, sqrt(rho(2-rho)) A], [0, (1-rho) A]], size 2n x 2n.
ComplexMatrix block_embed(const ComplexMatrix& a, const RhoParam& rho);

// Certificate's attaining vector is the stacked [x; y] witness of dimension
// 2n; residual is the block residual scaled by 2/rho.
RadiusCertificate rho_radius(const ComplexMatrix& a, const RhoParam& rho,
                             double tol = 1e-9);

// One near-maximal angle of f(theta) = lambda_max(H_theta(T)) together with
// an orthonormal basis of the top eigenspace of H_theta at that angle.
struct AttainingSet {
  double theta = 0.0;
  double value = 0.0;
  std::vector<ComplexVector> basis;
};

// Every local maximizer of f within tol of the global maximum (angle count
// capped on plateaus), for an arbitrary square operator T.
std::vector<AttainingSet> attaining_eigenspaces(const ComplexMatrix& t,
                                                double tol = 1e-9);

// Flattened (theta, z) pairs for the block embedding of A; every z satisfies
// (2/rho) |<T z, z>| = w_rho(A) within tol. Throws value_error on A = 0.
std::vector<std::pair<double, ComplexVector>> attaining_vectors(
    const ComplexMatrix& a, const RhoParam& rho, double tol = 1e-9);

// Value-only evaluations (no certificate assembly); same theta-scan.
double numerical_radius_value(const ComplexMatrix& t);
double rho_radius_value(const ComplexMatrix& a, const RhoParam& rho);

namespace detail {

// Hermitian part of e^{i theta} T, built exactly Hermitian.
ComplexMatrix hermitian_part(const ComplexMatrix& t, double theta);

// Refined near-maximal angles of f(theta): 720-point grid, then
// golden-section refinement around every grid point within
// max(1e-6, 3e-4 * grid max) of the grid maximum. Results are deduplicated,
// sorted by descending value, and capped (plateaus are subsampled evenly).
struct ThetaCandidate {
  double theta;
  double value;
};
std::vector<ThetaCandidate> scan_theta_maxima(const ComplexMatrix& t,
                                              int cap = 24);

}  // namespace detail

}  // namespace oprad
