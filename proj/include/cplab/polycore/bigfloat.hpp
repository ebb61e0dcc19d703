#pragma once

#include <mpfr.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cplab/polycore/rational.hpp"

namespace cplab {

inline constexpr mpfr_prec_t kDefaultPrecisionBits = 256;

/// Precision (bits) that newly created values and arithmetic results use on
/// the calling thread.
mpfr_prec_t working_precision();

/// Scoped override of the calling thread's working precision.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(mpfr_prec_t bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  mpfr_prec_t saved_;
};

/// Arbitrary-precision binary float backed by MPFR. Every result is rounded to
/// nearest at the working precision in effect when it is produced; the
/// exponent range is widened to MPFR's maximum at startup.
class BigFloat {
 public:
  BigFloat();
  BigFloat(int v);     // NOLINT(google-explicit-constructor)
  BigFloat(long v);    // NOLINT(google-explicit-constructor)
  BigFloat(double v);  // NOLINT(google-explicit-constructor)
  explicit BigFloat(const Rational& q);
  explicit BigFloat(const Integer& z);
  /// Decimal or "p/q" text; the "p/q" form is rounded once from the exact value.
  explicit BigFloat(std::string_view text);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  /// Re-rounds this value to `bits`.
  void round_to(mpfr_prec_t bits);
  /// Copy rounded to the current working precision.
  BigFloat rounded() const;

  double to_double() const;
  long to_long() const;
  /// Exact value of the binary float as a rational.
  Rational to_rational() const;
  /// Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits = 20) const;

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1 (undefined for zero).
  long exponent() const { return mpfr_get_exp(value_); }

  BigFloat& operator+=(const BigFloat& rhs);
  BigFloat& operator-=(const BigFloat& rhs);
  BigFloat& operator*=(const BigFloat& rhs);
  BigFloat& operator/=(const BigFloat& rhs);

  BigFloat operator-() const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

  friend bool operator==(const BigFloat& a, const BigFloat& b);
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

 private:
  mpfr_t value_;
};

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat cbrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat expm1(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat log1p(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, const BigFloat& y);
BigFloat pow(const BigFloat& x, long n);
BigFloat gamma(const BigFloat& x);
/// x * 2^e, exact.
BigFloat ldexp(const BigFloat& x, long e);
BigFloat max(const BigFloat& a, const BigFloat& b);
BigFloat min(const BigFloat& a, const BigFloat& b);
BigFloat pi();

/// Relative difference |a - b| / max(|a|, |b|), zero when both vanish.
BigFloat relative_difference(const BigFloat& a, const BigFloat& b);

}  // namespace cplab
