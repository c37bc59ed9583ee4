// Self-contained dense complex linear algebra: Hermitian eigenproblems via
// cyclic Jacobi, singular values, inner products and unit-sphere utilities.
//
// Inner products follow the convention of being linear in the FIRST argument:
// inner(u, v) = sum_i u_i * conj(v_i).

#pragma once

#include <vector>

#include "oprad/types.hpp"

namespace oprad {

// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

// <u, v>, linear in u, conjugate-linear in v.
Complex inner(const ComplexVector& u, const ComplexVector& v);

double frobenius_norm(const ComplexMatrix& a);
bool is_zero(const ComplexMatrix& a);
ComplexVector normalize(const ComplexVector& v);

// Full eigendecomposition of a Hermitian matrix. Eigenvalues ascending,
// vectors[k] the unit eigenvector of values[k]; vectors are orthonormal.
struct HermitianEigenResult {
  std::vector<double> values;
  std::vector<ComplexVector> vectors;
};

// Requires max entrywise |H - H*| <= hermitian_tol; the iteration itself runs
// on the symmetrized (H + H*)/2 to absorb caller rounding.
HermitianEigenResult hermitian_eigs(const ComplexMatrix& h,
                                    double hermitian_tol = 1e-12);

// Largest eigenvalue and a corresponding unit eigenvector.
EigenPair hermitian_eig_max(const ComplexMatrix& h,
                            double hermitian_tol = 1e-12);

// Largest singular value, sqrt(lambda_max(A* A)). Zero iff A is zero.
double operator_norm(const ComplexMatrix& a);

// Orthonormal basis of the eigenspace of A*A for eigenvalues within
// tol * sigma_max^2 of sigma_max^2. Every returned unit z has
// ||A z|| >= (1 - tol) * ||A||. Throws value_error on the zero matrix.
std::vector<ComplexVector> max_singular_subspace(const ComplexMatrix& a,
                                                 double tol = 1e-8);

namespace detail {

// In-place cyclic Jacobi sweeps on the Hermitian matrix stored row-major in
// h (n x n). Stops when the off-diagonal Frobenius mass drops below
// 1e-13 * ||H||_F. If v is non-null it must hold the identity on entry; on
// exit its columns are the eigenvectors (H = V diag V*). Diagonal of h then
// carries the eigenvalues. Returns the sweep count used.
int jacobi_hermitian(Complex* h, Complex* v, int n);

// Value-only largest eigenvalue; clobbers h.
double jacobi_lambda_max(Complex* h, int n);

}  // namespace detail

}  // namespace oprad
