#pragma once

#include <iosfwd>

#include "cplab/polycore/bigfloat.hpp"

namespace cplab {

// Complex value over BigFloat. Only the operations the contour and special
// function code need; all branch cuts are the principal ones.
struct Complex {
  BigFloat re;
  BigFloat im;

  Complex() = default;
  Complex(BigFloat r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(int r) : re(r), im(0) {}
  explicit Complex(double r) : re(r), im(0) {}

  static Complex polar(const BigFloat& radius, const BigFloat& angle);
  static Complex i() { return Complex(BigFloat(0), BigFloat(1)); }

  Complex& operator+=(const Complex& rhs);
  Complex& operator-=(const Complex& rhs);
  Complex& operator*=(const Complex& rhs);
  Complex& operator*=(const BigFloat& rhs);
  Complex& operator/=(const Complex& rhs);
  Complex& operator/=(const BigFloat& rhs);

  Complex operator-() const { return {-re, -im}; }
  /// Copy rounded to the current working precision.
  Complex rounded() const { return {re.rounded(), im.rounded()}; }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const BigFloat& b);
Complex operator*(const BigFloat& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const BigFloat& b);

Complex conj(const Complex& z);
/// |z|^2
BigFloat norm(const Complex& z);
BigFloat abs(const Complex& z);
/// Principal argument in (-pi, pi].
BigFloat arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal logarithm.
Complex log(const Complex& z);
/// Principal square root (Re >= 0).
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long n);

std::ostream& operator<<(std::ostream& os, const Complex& z);

}  // namespace cplab
