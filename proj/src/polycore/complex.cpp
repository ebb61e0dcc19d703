#include "cplab/polycore/complex.hpp"

#include <ostream>

namespace cplab {

Complex Complex::polar(const BigFloat& radius, const BigFloat& angle) {
  BigFloat s;
  BigFloat c;
  mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
  return {radius * c, radius * s};
}

Complex& Complex::operator+=(const Complex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& rhs) {
  BigFloat r = re * rhs.re - im * rhs.im;
  im = re * rhs.im + im * rhs.re;
  re = std::move(r);
  return *this;
}

Complex& Complex::operator*=(const BigFloat& rhs) {
  re *= rhs;
  im *= rhs;
  return *this;
}

Complex& Complex::operator/=(const Complex& rhs) {
  *this = *this / rhs;
  return *this;
}

Complex& Complex::operator/=(const BigFloat& rhs) {
  re /= rhs;
  im /= rhs;
  return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex operator*(const Complex& a, const BigFloat& b) { return {a.re * b, a.im * b}; }
Complex operator*(const BigFloat& a, const Complex& b) { return {a * b.re, a * b.im}; }

// Smith's algorithm; avoids overflow in |b|^2 for wide-range operands.
Complex operator/(const Complex& a, const Complex& b) {
  if (abs(b.re) >= abs(b.im)) {
    BigFloat r = b.im / b.re;
    BigFloat d = b.re + b.im * r;
    return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
  }
  BigFloat r = b.re / b.im;
  BigFloat d = b.re * r + b.im;
  return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}

Complex operator/(const Complex& a, const BigFloat& b) { return {a.re / b, a.im / b}; }

Complex conj(const Complex& z) { return {z.re, -z.im}; }
BigFloat norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
BigFloat abs(const Complex& z) { return hypot(z.re, z.im); }
BigFloat arg(const Complex& z) { return atan2(z.im, z.re); }

Complex exp(const Complex& z) { return Complex::polar(exp(z.re), z.im); }

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex sqrt(const Complex& z) {
  if (z.re.is_zero() && z.im.is_zero()) return {BigFloat(0), BigFloat(0)};
  BigFloat r = abs(z);
  if (z.re.sign() >= 0) {
    BigFloat s = sqrt((r + z.re) / 2);
    return {s, z.im / (2 * s)};
  }
  BigFloat t = sqrt((r - z.re) / 2);
  BigFloat re = abs(z.im) / (2 * t);
  return {re, z.im.sign() < 0 ? -t : t};
}

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(1) / pow(z, -n);
  Complex result(1);
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Complex& z) {
  return os << "(" << z.re << ", " << z.im << ")";
}

}  // namespace cplab
