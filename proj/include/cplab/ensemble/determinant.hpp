#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cplab/polycore/complex.hpp"
#include "cplab/polycore/rational.hpp"

namespace cplab {

/// Gaussian rational a + bi.
struct QComplex {
  Rational re;
  Rational im;

  QComplex() = default;
  QComplex(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  QComplex(int r) : re(r) {}                  // NOLINT(google-explicit-constructor)
  QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend QComplex operator+(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend QComplex operator-(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend QComplex operator*(const QComplex& a, const QComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend QComplex operator/(const QComplex& a, const QComplex& b) {
    Rational d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  QComplex operator-() const { return {-re, -im}; }
  friend bool operator==(const QComplex& a, const QComplex& b) { return a.re == b.re && a.im == b.im; }
};

inline QComplex conj(const QComplex& z) { return {z.re, -z.im}; }

/// Row-major dense matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("DenseMatrix: negative dimension");
  }

  static DenseMatrix identity(int n, const T& scale) {
    DenseMatrix r(n, n);
    for (int i = 0; i < n; ++i) r(i, i) = scale;
    return r;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  template <class U, class Conv>
  DenseMatrix<U> map(Conv conv) const {
    DenseMatrix<U> r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = conv((*this)(i, j));
    return r;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const QComplex& x) { return x.is_zero(); }

inline double magnitude(const std::complex<double>& x) { return std::abs(x); }
inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const Complex& x) { return abs(x).to_double(); }

inline std::complex<double> conjugate(const std::complex<double>& x) { return std::conj(x); }
inline Complex conjugate(const Complex& x) { return conj(x); }
inline QComplex conjugate(const QComplex& x) { return conj(x); }
inline Rational conjugate(const Rational& x) { return x; }

}  // namespace detail

/// A^* A for an n x m matrix A (conjugate transpose; plain transpose for real
/// scalar types).
template <class T>
DenseMatrix<T> gram(const DenseMatrix<T>& a) {
  DenseMatrix<T> g(a.cols(), a.cols());
  for (int i = 0; i < a.cols(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      T s = T(0);
      for (int k = 0; k < a.rows(); ++k) s = s + detail::conjugate(a(k, i)) * a(k, j);
      g(i, j) = s;
    }
  }
  return g;
}

/// A A^*.
template <class T>
DenseMatrix<T> cogram(const DenseMatrix<T>& a) {
  DenseMatrix<T> g(a.rows(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.rows(); ++j) {
      T s = T(0);
      for (int k = 0; k < a.cols(); ++k) s = s + a(i, k) * detail::conjugate(a(j, k));
      g(i, j) = s;
    }
  }
  return g;
}

/// Exact determinant over a field (first nonzero pivot).
template <class T>
T determinant_exact(DenseMatrix<T> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = a.rows();
  T det = T(1);
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && detail::is_zero(a(p, k))) ++p;
    if (p == n) return T(0);
    if (p != k) {
      for (int j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      det = -det;
    }
    det = det * a(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (detail::is_zero(a(i, k))) continue;
      T f = a(i, k) / a(k, k);
      for (int j = k + 1; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
    }
  }
  return det;
}

/// Floating-point determinant by LU with partial pivoting. When `pivot_ratio`
/// is given it receives min|pivot| / max|pivot| (0 for a singular matrix), a
/// cheap conditioning indicator.
template <class T>
T determinant_pivoted(DenseMatrix<T> a, double* pivot_ratio = nullptr) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = a.rows();
  T det = T(1);
  double lo = 0;
  double hi = 0;
  for (int k = 0; k < n; ++k) {
    int p = k;
    double best = detail::magnitude(a(k, k));
    for (int i = k + 1; i < n; ++i) {
      double v = detail::magnitude(a(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    lo = k == 0 ? best : std::min(lo, best);
    hi = std::max(hi, best);
    if (best == 0) {
      if (pivot_ratio) *pivot_ratio = 0;
      return T(0);
    }
    if (p != k) {
      for (int j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      det = -det;
    }
    det = det * a(k, k);
    for (int i = k + 1; i < n; ++i) {
      T f = a(i, k) / a(k, k);
      for (int j = k + 1; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
    }
  }
  if (pivot_ratio) *pivot_ratio = n == 0 ? 1.0 : lo / hi;
  return det;
}

}  // namespace cplab
