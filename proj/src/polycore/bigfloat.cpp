#include "cplab/polycore/bigfloat.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

namespace cplab {
namespace {

thread_local mpfr_prec_t t_precision = kDefaultPrecisionBits;

// The exponent range is thread-local in a thread-safe MPFR build, so every
// thread widens it before creating its first value.
struct RangeWidener {
  RangeWidener() {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
  }
};

void init_value(mpfr_ptr v, mpfr_prec_t prec) {
  thread_local RangeWidener widener;
  mpfr_init2(v, prec);
}

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

}  // namespace

mpfr_prec_t working_precision() { return t_precision; }

PrecisionGuard::PrecisionGuard(mpfr_prec_t bits) : saved_(t_precision) {
  if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
    throw std::invalid_argument("precision out of range: " + std::to_string(bits));
  }
  t_precision = bits;
}

PrecisionGuard::~PrecisionGuard() { t_precision = saved_; }

BigFloat::BigFloat() {
  init_value(value_, t_precision);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(int v) {
  init_value(value_, t_precision);
  mpfr_set_si(value_, v, kRnd);
}

BigFloat::BigFloat(long v) {
  init_value(value_, t_precision);
  mpfr_set_si(value_, v, kRnd);
}

BigFloat::BigFloat(double v) {
  init_value(value_, t_precision);
  mpfr_set_d(value_, v, kRnd);
}

BigFloat::BigFloat(const Rational& q) {
  init_value(value_, t_precision);
  mpfr_set_q(value_, q.get_mpq_t(), kRnd);
}

BigFloat::BigFloat(const Integer& z) {
  init_value(value_, t_precision);
  mpfr_set_z(value_, z.get_mpz_t(), kRnd);
}

BigFloat::BigFloat(std::string_view text) {
  init_value(value_, t_precision);
  if (text.find('/') != std::string_view::npos) {
    mpfr_set_q(value_, parse_rational(text).get_mpq_t(), kRnd);
    return;
  }
  std::string s(text);
  if (mpfr_set_str(value_, s.c_str(), 10, kRnd) != 0) {
    mpfr_clear(value_);
    throw std::invalid_argument("not a number: '" + s + "'");
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  init_value(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRnd);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  init_value(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRnd);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

void BigFloat::round_to(mpfr_prec_t bits) { mpfr_prec_round(value_, bits, kRnd); }

BigFloat BigFloat::rounded() const {
  BigFloat r;
  mpfr_set(r.value_, value_, kRnd);
  return r;
}

double BigFloat::to_double() const { return mpfr_get_d(value_, kRnd); }

long BigFloat::to_long() const { return mpfr_get_si(value_, kRnd); }

Rational BigFloat::to_rational() const {
  if (!is_finite()) throw std::domain_error("to_rational: non-finite value");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string BigFloat::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  char* raw = nullptr;
  std::string fmt = "%." + std::to_string(digits > 0 ? digits - 1 : 0) + "Re";
  mpfr_asprintf(&raw, fmt.c_str(), value_);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

namespace {

BigFloat make_result() { return BigFloat(); }

}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  mpfr_prec_round(value_, t_precision, kRnd);
  mpfr_add(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  mpfr_prec_round(value_, t_precision, kRnd);
  mpfr_sub(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  mpfr_prec_round(value_, t_precision, kRnd);
  mpfr_mul(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  mpfr_prec_round(value_, t_precision, kRnd);
  mpfr_div(value_, value_, rhs.value_, kRnd);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r = make_result();
  mpfr_neg(r.value_, value_, kRnd);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r = make_result();
  mpfr_add(r.value_, a.value_, b.value_, kRnd);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r = make_result();
  mpfr_sub(r.value_, a.value_, b.value_, kRnd);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r = make_result();
  mpfr_mul(r.value_, a.value_, b.value_, kRnd);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r = make_result();
  mpfr_div(r.value_, a.value_, b.value_, kRnd);
  return r;
}

bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.to_string(); }

#define CPLAB_UNARY(name, fn)                 \
  BigFloat name(const BigFloat& x) {          \
    BigFloat r;                               \
    fn(r.get(), x.get(), kRnd);               \
    return r;                                 \
  }

CPLAB_UNARY(abs, mpfr_abs)
CPLAB_UNARY(sqrt, mpfr_sqrt)
CPLAB_UNARY(cbrt, mpfr_cbrt)
CPLAB_UNARY(exp, mpfr_exp)
CPLAB_UNARY(expm1, mpfr_expm1)
CPLAB_UNARY(log, mpfr_log)
CPLAB_UNARY(log1p, mpfr_log1p)
CPLAB_UNARY(sin, mpfr_sin)
CPLAB_UNARY(cos, mpfr_cos)
CPLAB_UNARY(gamma, mpfr_gamma)

#undef CPLAB_UNARY

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r;
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r;
  mpfr_hypot(r.get(), x.get(), y.get(), kRnd);
  return r;
}

BigFloat pow(const BigFloat& x, const BigFloat& y) {
  BigFloat r;
  mpfr_pow(r.get(), x.get(), y.get(), kRnd);
  return r;
}

BigFloat pow(const BigFloat& x, long n) {
  BigFloat r;
  mpfr_pow_si(r.get(), x.get(), n, kRnd);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r;
  if (e >= 0) {
    mpfr_mul_2ui(r.get(), x.get(), static_cast<unsigned long>(e), kRnd);
  } else {
    mpfr_div_2ui(r.get(), x.get(), static_cast<unsigned long>(-e), kRnd);
  }
  return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
BigFloat min(const BigFloat& a, const BigFloat& b) { return b < a ? b : a; }

BigFloat pi() {
  BigFloat r;
  mpfr_const_pi(r.get(), kRnd);
  return r;
}

BigFloat relative_difference(const BigFloat& a, const BigFloat& b) {
  BigFloat scale = max(abs(a), abs(b));
  if (scale.is_zero()) return BigFloat(0);
  return abs(a - b) / scale;
}

}  // namespace cplab
