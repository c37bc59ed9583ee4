// Dense complex vector/matrix value types shared by every module.
//
// All public entry points validate finiteness on construction: a NaN or Inf
// anywhere is a programming error upstream and is rejected immediately
// instead of propagating through eigeniterations.

#pragma once

#include <complex>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oprad {

using Complex = std::complex<double>;

struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct value_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Invalid rho parameter (outside (0,2] or below the conditioning floor).
struct rho_error : std::domain_error {
  using std::domain_error::domain_error;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

class ComplexVector {
 public:
  ComplexVector() = default;

  explicit ComplexVector(std::vector<Complex> data) : data_(std::move(data)) {
    if (data_.empty())
      throw dimension_error("ComplexVector: dimension must be positive");
    for (const Complex& z : data_)
      if (!is_finite(z)) throw value_error("ComplexVector: non-finite entry");
  }

  ComplexVector(std::initializer_list<Complex> init)
      : ComplexVector(std::vector<Complex>(init)) {}

  static ComplexVector zero(std::size_t dim) {
    return ComplexVector(std::vector<Complex>(dim, Complex(0.0, 0.0)));
  }

  static ComplexVector unit(std::size_t dim, std::size_t k) {
    std::vector<Complex> d(dim, Complex(0.0, 0.0));
    d.at(k) = Complex(1.0, 0.0);
    return ComplexVector(std::move(d));
  }

  std::size_t dim() const { return data_.size(); }
  const Complex& operator[](std::size_t i) const { return data_[i]; }
  Complex& operator[](std::size_t i) { return data_[i]; }
  const std::vector<Complex>& data() const { return data_; }

  double norm() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

 private:
  std::vector<Complex> data_;
};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  // Row-major data of length rows*cols.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows_ == 0 || cols_ == 0)
      throw dimension_error("ComplexMatrix: dimensions must be positive");
    if (data_.size() != rows_ * cols_)
      throw dimension_error("ComplexMatrix: data length " +
                            std::to_string(data_.size()) + " != rows*cols " +
                            std::to_string(rows_ * cols_));
    for (const Complex& z : data_)
      if (!is_finite(z)) throw value_error("ComplexMatrix: non-finite entry");
  }

  // Convenience for tests and small literals: {{a,b},{c,d}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    if (rows_ == 0 || cols_ == 0)
      throw dimension_error("ComplexMatrix: dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_)
        throw dimension_error("ComplexMatrix: ragged initializer");
      for (const Complex& z : r) {
        if (!is_finite(z)) throw value_error("ComplexMatrix: non-finite entry");
        data_.push_back(z);
      }
    }
  }

  static ComplexMatrix zero(std::size_t n) {
    return ComplexMatrix(n, n, std::vector<Complex>(n * n, Complex(0.0, 0.0)));
  }

  static ComplexMatrix identity(std::size_t n) {
    std::vector<Complex> d(n * n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = Complex(1.0, 0.0);
    return ComplexMatrix(n, n, std::move(d));
  }

  static ComplexMatrix diagonal(const std::vector<Complex>& entries) {
    const std::size_t n = entries.size();
    std::vector<Complex> d(n * n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = entries[i];
    return ComplexMatrix(n, n, std::move(d));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const std::vector<Complex>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

struct EigenPair {
  double value = 0.0;
  ComplexVector vector;  // unit norm
};

// ---- elementwise arithmetic -------------------------------------------

inline ComplexVector operator+(const ComplexVector& a, const ComplexVector& b) {
  if (a.dim() != b.dim()) throw dimension_error("vector +: dimension mismatch");
  std::vector<Complex> d(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) d[i] = a[i] + b[i];
  return ComplexVector(std::move(d));
}

inline ComplexVector operator*(Complex c, const ComplexVector& v) {
  std::vector<Complex> d(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) d[i] = c * v[i];
  return ComplexVector(std::move(d));
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw dimension_error("matrix +: dimension mismatch");
  std::vector<Complex> d(a.data());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += b.data()[i];
  return ComplexMatrix(a.rows(), a.cols(), std::move(d));
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw dimension_error("matrix -: dimension mismatch");
  std::vector<Complex> d(a.data());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b.data()[i];
  return ComplexMatrix(a.rows(), a.cols(), std::move(d));
}

inline ComplexMatrix operator*(Complex c, const ComplexMatrix& a) {
  std::vector<Complex> d(a.data());
  for (Complex& z : d) z *= c;
  return ComplexMatrix(a.rows(), a.cols(), std::move(d));
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw dimension_error("matrix *: inner mismatch");
  std::vector<Complex> d(a.rows() * b.cols(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        d[i * b.cols() + j] += aik * b(k, j);
    }
  return ComplexMatrix(a.rows(), b.cols(), std::move(d));
}

inline ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v) {
  if (a.cols() != v.dim()) throw dimension_error("matvec: dimension mismatch");
  std::vector<Complex> d(a.rows(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s(0.0, 0.0);
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    d[i] = s;
  }
  return ComplexVector(std::move(d));
}

}  // namespace oprad
