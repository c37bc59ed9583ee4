// Decides w_rho Birkhoff-James orthogonality and w_rho parallelism, and
// extracts witness vectors certifying each decision.
//
// A is w_rho-orthogonal to B when min over complex gamma of w_rho(A + gamma B)
// equals w_rho(A); A is w_rho-parallel to B when max over unimodular lambda of
// w_rho(A + lambda B) equals w_rho(A) + w_rho(B). Witnesses are unit vectors
// [x; y] in the sphere of H (+) H drawn from radius-attaining eigenspaces.

#pragma once

#include <optional>
#include <vector>

#include "oprad/radius.hpp"
#include "oprad/types.hpp"

namespace oprad {

struct WitnessRecord {
  std::optional<double> theta;  // set for orthogonality witnesses
  ComplexVector x;
  ComplexVector y;
  double attainment_residual = 0.0;
  double sign_or_product_residual = 0.0;
};

struct WitnessSearch {
  bool found = false;
  // The first satisfying record, or the best-residual candidate when not
  // found (residuals then exceed the tolerance).
  WitnessRecord record;
};

struct OrthogonalityReport {
  bool orthogonal = false;
  double rho = 0.0;
  double base_radius = 0.0;  // w_rho(A)
  double min_value = 0.0;    // min over gamma of w_rho(A + gamma B)
  Complex gamma_star{0.0, 0.0};
  std::vector<WitnessRecord> witnesses;
  std::vector<WitnessRecord> failed_witnesses;  // best candidates per failed theta
  double tolerance = 0.0;  // effective absolute decision threshold
  bool degenerate = false; // A = 0 or B = 0 handled definitionally
};

struct ParallelismReport {
  bool parallel = false;
  double rho = 0.0;
  double sum_radius = 0.0;  // w_rho(A) + w_rho(B)
  double max_value = 0.0;   // max over |lambda| = 1 of w_rho(A + lambda B)
  Complex lambda_star{1.0, 0.0};
  std::vector<WitnessRecord> witnesses;
  std::vector<WitnessRecord> failed_witnesses;
  double tolerance = 0.0;
  bool degenerate = false;
};

// sqrt((8-4rho)/rho) x + ((2-2rho)/rho) y; equals (2/rho) times the vector
// sqrt(rho(2-rho)) x + (1-rho) y appearing in the sign condition.
ComplexVector scaled_witness_vector(const ComplexVector& x,
                                    const ComplexVector& y,
                                    const RhoParam& rho);

// Decision tolerances are relative: the threshold is tol * max(1, scale)
// with scale = w_rho(A) for orthogonality and w_rho(A) + w_rho(B) for
// parallelism. Witness residual tolerances are absolute (default 1e-6).
OrthogonalityReport is_orthogonal(const ComplexMatrix& a,
                                  const ComplexMatrix& b, const RhoParam& rho,
                                  double tol = 1e-7, int theta_samples = 16);

ParallelismReport is_parallel(const ComplexMatrix& a, const ComplexMatrix& b,
                              const RhoParam& rho, double tol = 1e-7);

// Scans the attaining eigenspaces of block_embed(A, rho) -- basis vectors
// first, then pairwise phase/weight combinations, then a fine within-
// eigenspace search -- for [x; y] with
//   | |<Ay, u>| - w_rho(A) | <= tol   (u the scaled witness vector) and
//   max(0, -Re(e^{i theta} <v, Ay> <By, v>)) <= tol, v = sqrt(rho(2-rho))x+(1-rho)y.
WitnessSearch find_orthogonality_witness(const ComplexMatrix& a,
                                         const ComplexMatrix& b,
                                         const RhoParam& rho, double theta,
                                         double tol = 1e-6);

// Scans attaining vectors of block_embed(A + lambda* B, rho) at the
// maximizing lambda* for | |<Ay,u><By,u>| - w_rho(A) w_rho(B) | <= tol.
WitnessSearch find_parallelism_witness(const ComplexMatrix& a,
                                       const ComplexMatrix& b,
                                       const RhoParam& rho, double tol = 1e-6);

struct SubspaceSearch {
  bool found = false;
  std::optional<ComplexVector> z;
  double residual = 0.0;  // best |<Az, Bz>| (or product gap) achieved
};

// Bhatia-Semrl orthogonality: unit z in the maximal singular subspace of A
// with |<Az, Bz>| <= tol * ||A|| ||B||. found implies A is Birkhoff-James
// orthogonal to B in the operator norm.
SubspaceSearch bhatia_semrl_check(const ComplexMatrix& a,
                                  const ComplexMatrix& b, double tol = 1e-7);

// Operator-norm parallelism: unit z with | |<Az,Bz>| - ||A|| ||B|| | within
// tol * max(1, ||A|| ||B||). Uses max_z |<Az,Bz>| = w(B* A).
SubspaceSearch norm_parallel_check(const ComplexMatrix& a,
                                   const ComplexMatrix& b, double tol = 1e-7);

// rho = 2 specializations; witnesses collapse to the single-vector form
// (x is identically zero and reporting keeps only y).
OrthogonalityReport numerical_radius_orthogonal(const ComplexMatrix& a,
                                                const ComplexMatrix& b,
                                                double tol = 1e-7,
                                                int theta_samples = 16);
ParallelismReport numerical_radius_parallel(const ComplexMatrix& a,
                                            const ComplexMatrix& b,
                                            double tol = 1e-7);

}  // namespace oprad
