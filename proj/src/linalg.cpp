#include "oprad/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace oprad {

ComplexMatrix adjoint(const ComplexMatrix& a) {
  std::vector<Complex> d(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      d[j * a.rows() + i] = std::conj(a(i, j));
  return ComplexMatrix(a.cols(), a.rows(), std::move(d));
}

Complex inner(const ComplexVector& u, const ComplexVector& v) {
  if (u.dim() != v.dim()) throw dimension_error("inner: dimension mismatch");
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * std::conj(v[i]);
  return s;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const Complex& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

bool is_zero(const ComplexMatrix& a) {
  for (const Complex& z : a.data())
    if (z != Complex(0.0, 0.0)) return false;
  return true;
}

ComplexVector normalize(const ComplexVector& v) {
  const double n = v.norm();
  if (n < 1e-300) throw value_error("normalize: zero vector");
  return Complex(1.0 / n, 0.0) * v;
}

namespace detail {

namespace {

double offdiag_frobenius_sq(const Complex* h, int n) {
  double s = 0.0;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) s += 2.0 * std::norm(h[p * n + q]);
  return s;
}

double frobenius_sq(const Complex* h, int n) {
  double s = 0.0;
  for (int i = 0; i < n * n; ++i) s += std::norm(h[i]);
  return s;
}

// One complex Jacobi rotation annihilating h[p][q]. Updates h (both
// triangles) and, when v != nullptr, accumulates V <- V U.
void rotate(Complex* h, Complex* v, int n, int p, int q) {
  const Complex b = h[p * n + q];
  const double beta = std::abs(b);
  if (beta == 0.0) return;
  const Complex phase = b / beta;  // e^{i phi}
  const double a = h[p * n + p].real();
  const double d = h[q * n + q].real();

  const double tau = (d - a) / (2.0 * beta);
  const double sign = tau >= 0.0 ? 1.0 : -1.0;
  const double t = -sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex sp = s * phase;             // s e^{i phi}
  const Complex spc = s * std::conj(phase); // s e^{-i phi}

  // Rows p,q (H <- U* H), mirroring into columns to keep both triangles.
  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex hpk = h[p * n + k];
    const Complex hqk = h[q * n + k];
    const Complex npk = c * hpk + sp * hqk;
    const Complex nqk = -spc * hpk + c * hqk;
    h[p * n + k] = npk;
    h[k * n + p] = std::conj(npk);
    h[q * n + k] = nqk;
    h[k * n + q] = std::conj(nqk);
  }

  const double app = a * c * c + 2.0 * beta * s * c + d * s * s;
  const double aqq = a * s * s - 2.0 * beta * s * c + d * c * c;
  h[p * n + p] = Complex(app, 0.0);
  h[q * n + q] = Complex(aqq, 0.0);
  h[p * n + q] = Complex(0.0, 0.0);
  h[q * n + p] = Complex(0.0, 0.0);

  if (v) {
    for (int k = 0; k < n; ++k) {
      const Complex vkp = v[k * n + p];
      const Complex vkq = v[k * n + q];
      v[k * n + p] = c * vkp + spc * vkq;
      v[k * n + q] = -sp * vkp + c * vkq;
    }
  }
}

}  // namespace

int jacobi_hermitian(Complex* h, Complex* v, int n) {
  if (n == 1) {
    h[0] = Complex(h[0].real(), 0.0);
    return 0;
  }
  for (int i = 0; i < n; ++i) h[i * n + i] = Complex(h[i * n + i].real(), 0.0);

  const double norm_f = std::sqrt(frobenius_sq(h, n));
  if (norm_f == 0.0) return 0;
  const double stop = 1e-13 * norm_f;
  const double skip = stop / (n * n);

  constexpr int kMaxSweeps = 50;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (std::sqrt(offdiag_frobenius_sq(h, n)) < stop) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        if (std::abs(h[p * n + q]) > skip) rotate(h, v, n, p, q);
  }
  return sweep;
}

double jacobi_lambda_max(Complex* h, int n) {
  jacobi_hermitian(h, nullptr, n);
  double m = h[0].real();
  for (int i = 1; i < n; ++i) m = std::max(m, h[i * n + i].real());
  return m;
}

}  // namespace detail

HermitianEigenResult hermitian_eigs(const ComplexMatrix& h,
                                    double hermitian_tol) {
  if (!h.square()) throw dimension_error("hermitian_eigs: matrix not square");
  const int n = static_cast<int>(h.rows());

  double dev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      dev = std::max(dev, std::abs(h(i, j) - std::conj(h(j, i))));
  if (dev > hermitian_tol)
    throw value_error("hermitian_eigs: input deviates from Hermitian by " +
                      std::to_string(dev));

  // Symmetrize to absorb caller rounding before iterating.
  std::vector<Complex> w(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w[i * n + j] = 0.5 * (h(i, j) + std::conj(h(j, i)));

  std::vector<Complex> v(n * n, Complex(0.0, 0.0));
  for (int i = 0; i < n; ++i) v[i * n + i] = Complex(1.0, 0.0);

  detail::jacobi_hermitian(w.data(), v.data(), n);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return w[a * n + a].real() < w[b * n + b].real();
  });

  HermitianEigenResult out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (int k : order) {
    out.values.push_back(w[k * n + k].real());
    std::vector<Complex> col(n);
    for (int i = 0; i < n; ++i) col[i] = v[i * n + k];
    out.vectors.push_back(normalize(ComplexVector(std::move(col))));
  }
  return out;
}

EigenPair hermitian_eig_max(const ComplexMatrix& h, double hermitian_tol) {
  HermitianEigenResult r = hermitian_eigs(h, hermitian_tol);
  return EigenPair{r.values.back(), r.vectors.back()};
}

double operator_norm(const ComplexMatrix& a) {
  const ComplexMatrix gram = adjoint(a) * a;
  const int n = static_cast<int>(gram.rows());
  std::vector<Complex> w(gram.data());
  const double lmax = detail::jacobi_lambda_max(w.data(), n);
  return std::sqrt(std::max(0.0, lmax));
}

std::vector<ComplexVector> max_singular_subspace(const ComplexMatrix& a,
                                                 double tol) {
  if (is_zero(a)) throw value_error("max_singular_subspace: zero matrix");
  const HermitianEigenResult r = hermitian_eigs(adjoint(a) * a);
  const double lmax = r.values.back();
  std::vector<ComplexVector> basis;
  for (std::size_t k = 0; k < r.values.size(); ++k)
    if (r.values[k] >= lmax - tol * lmax) basis.push_back(r.vectors[k]);
  return basis;
}

}  // namespace oprad
