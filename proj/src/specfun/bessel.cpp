#include "cplab/specfun/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cplab {
namespace {

void check_order(int alpha) {
  if (alpha < 0) throw std::invalid_argument("Bessel order must be a non-negative integer");
}

// Extra bits that absorb cancellation when the magnitude of the largest
// series term exceeds the result by about exp(excess).
mpfr_prec_t guard_bits(double excess) { return static_cast<mpfr_prec_t>(std::ceil(1.45 * std::max(0.0, excess))) + 24; }

// sum_k t_k with t_0 = head and t_k = t_{k-1} * ratio / (k (k + alpha)).
Complex hypergeometric_0f1(int alpha, const Complex& head, const Complex& ratio, double ratio_abs,
                           mpfr_prec_t bits, int max_terms) {
  Complex sum = head;
  Complex term = head;
  const BigFloat tol = ldexp(BigFloat(1), -static_cast<long>(bits) - 4);
  for (long k = 1; k <= max_terms; ++k) {
    term *= ratio;
    term /= BigFloat(k * (k + alpha));
    sum += term;
    // Terms decrease once k (k + alpha) exceeds |ratio|.
    if (static_cast<double>(k) * static_cast<double>(k + alpha) > ratio_abs) {
      BigFloat t = abs(term);
      BigFloat s = abs(sum);
      if (t.is_zero() || t <= tol * s) return sum;
    }
  }
  throw SeriesNotConverged("0F1 series did not converge within " + std::to_string(max_terms) + " terms");
}

// Sums sum_k sign^k a_k(alpha) / z^k with a_k the Hankel coefficients; returns
// both the alternating and the plain sums. Stops at relative size 2^{-bits}.
struct HankelSums {
  Complex alternating;
  Complex plain;
};

HankelSums hankel_sums(int alpha, const Complex& z, mpfr_prec_t bits, int max_terms) {
  const long four_alpha2 = 4L * alpha * alpha;
  Complex inv = Complex(1) / z;
  Complex term(1);
  HankelSums s{Complex(1), Complex(1)};
  const BigFloat tol = ldexp(BigFloat(1), -static_cast<long>(bits) - 4);
  BigFloat previous = BigFloat(1);
  for (long k = 1; k <= max_terms; ++k) {
    long odd = 2 * k - 1;
    long factor = four_alpha2 - odd * odd;
    term *= inv;
    term *= BigFloat(factor);
    term /= BigFloat(8 * k);
    BigFloat size = abs(term);
    if (size <= tol) return s;
    if (size > previous && k > 2 * alpha + 2) {
      throw SeriesNotConverged("asymptotic Bessel expansion diverges before reaching " + std::to_string(bits) +
                               " bits at |z|=" + abs(z).to_string(6));
    }
    previous = size;
    s.plain += term;
    if (k % 2 == 1) {
      s.alternating -= term;
    } else {
      s.alternating += term;
    }
  }
  throw SeriesNotConverged("asymptotic Bessel expansion exceeded the term budget");
}

}  // namespace

Complex bessel_i_series(int alpha, const Complex& z, const SeriesPolicy& policy) {
  check_order(alpha);
  const mpfr_prec_t p = policy.effective_precision();
  const double zabs = abs(z).to_double();
  const mpfr_prec_t bits = p + guard_bits(zabs - z.re.to_double());
  Complex result;
  {
    PrecisionGuard g(bits);
    Complex half = z / BigFloat(2);
    Complex head = pow(half, alpha) / BigFloat(factorial(static_cast<unsigned>(alpha)));
    if (head.re.is_zero() && head.im.is_zero()) {
      result = alpha == 0 ? Complex(1) : Complex(0);
    } else {
      result = hypergeometric_0f1(alpha, head, half * half, zabs * zabs / 4, bits, policy.max_terms);
    }
  }
  PrecisionGuard out(p);
  return result.rounded();
}

Complex bessel_i_asymptotic(int alpha, const Complex& z, const SeriesPolicy& policy) {
  check_order(alpha);
  if (z.re.sign() < 0) throw std::domain_error("bessel_i_asymptotic: requires Re z >= 0");
  if (z.re.is_zero() && z.im.is_zero()) throw std::domain_error("bessel_i_asymptotic: z = 0");
  const mpfr_prec_t p = policy.effective_precision();
  Complex result;
  {
    PrecisionGuard g(p + 32);
    HankelSums s = hankel_sums(alpha, z, p + 8, policy.max_terms);
    Complex root = sqrt(BigFloat(2) * pi() * z);
    Complex grow = exp(z) * s.alternating / root;
    Complex decay = exp(-z) * s.plain / root;
    // i (-1)^alpha e^{-z}, with the sign of i following the half plane of z.
    Complex rotated(-decay.im, decay.re);
    if (z.im.sign() < 0) rotated = -rotated;
    if (alpha % 2 == 1) rotated = -rotated;
    result = grow + rotated;
  }
  PrecisionGuard out(p);
  return result.rounded();
}

Complex bessel_i(int alpha, const Complex& z, const SeriesPolicy& policy) {
  check_order(alpha);
  const double zabs = abs(z).to_double();
  if (zabs < policy.bessel_crossover()) return bessel_i_series(alpha, z, policy);
  // I_alpha(-z) = (-1)^alpha I_alpha(z) moves the argument into Re z >= 0.
  if (z.re.sign() < 0) {
    Complex r = bessel_i_asymptotic(alpha, -z, policy);
    return alpha % 2 == 0 ? r : -r;
  }
  return bessel_i_asymptotic(alpha, z, policy);
}

Complex bessel_phi_series(int alpha, const Complex& q, const SeriesPolicy& policy) {
  check_order(alpha);
  const mpfr_prec_t p = policy.effective_precision();
  Complex result;
  {
    PrecisionGuard probe(64);
    Complex w = sqrt(q) * BigFloat(2);
    const double excess = (abs(w) - w.re).to_double();
    PrecisionGuard g(p + guard_bits(excess));
    Complex head = Complex(BigFloat(1) / BigFloat(factorial(static_cast<unsigned>(alpha))));
    result = hypergeometric_0f1(alpha, head, q, abs(q).to_double(), p + guard_bits(excess), policy.max_terms);
  }
  PrecisionGuard out(p);
  return result.rounded();
}

Complex bessel_phi(int alpha, const Complex& q, const SeriesPolicy& policy) {
  check_order(alpha);
  const mpfr_prec_t p = policy.effective_precision();
  const double wabs = 2.0 * std::sqrt(abs(q).to_double());
  if (wabs < policy.bessel_crossover()) return bessel_phi_series(alpha, q, policy);
  Complex result;
  {
    PrecisionGuard g(p + 32);
    Complex w = sqrt(q) * BigFloat(2);
    SeriesPolicy inner = policy;
    inner.precision = p + 32;
    inner.crossover = 0;
    Complex i = bessel_i_asymptotic(alpha, w, inner);
    result = i / pow(w / BigFloat(2), alpha);
  }
  PrecisionGuard out(p);
  return result.rounded();
}

BigFloat bessel_j_series(int alpha, const BigFloat& x, const SeriesPolicy& policy) {
  check_order(alpha);
  const mpfr_prec_t p = policy.effective_precision();
  const double xabs = abs(x).to_double();
  BigFloat result;
  {
    const mpfr_prec_t bits = p + guard_bits(xabs);
    PrecisionGuard g(bits);
    BigFloat half = x / BigFloat(2);
    BigFloat head = pow(half, static_cast<long>(alpha)) / BigFloat(factorial(static_cast<unsigned>(alpha)));
    if (head.is_zero()) {
      result = alpha == 0 ? BigFloat(1) : BigFloat(0);
    } else {
      Complex s = hypergeometric_0f1(alpha, Complex(head), Complex(-(half * half)), xabs * xabs / 4, bits,
                                     policy.max_terms);
      result = s.re;
    }
  }
  PrecisionGuard out(p);
  return result.rounded();
}

BigFloat bessel_j_asymptotic(int alpha, const BigFloat& x, const SeriesPolicy& policy) {
  check_order(alpha);
  if (x.sign() <= 0) throw std::domain_error("bessel_j_asymptotic: requires x > 0");
  const mpfr_prec_t p = policy.effective_precision();
  BigFloat result;
  {
    PrecisionGuard g(p + 32);
    // P = sum (-1)^k a_{2k} / x^{2k}, Q = sum (-1)^k a_{2k+1} / x^{2k+1}.
    const long four_alpha2 = 4L * alpha * alpha;
    const BigFloat tol = ldexp(BigFloat(1), -static_cast<long>(p) - 12);
    BigFloat term(1);
    BigFloat P(1);
    BigFloat Q(0);
    BigFloat previous(1);
    bool done = false;
    for (long k = 1; k <= policy.max_terms; ++k) {
      long odd = 2 * k - 1;
      long factor = four_alpha2 - odd * odd;
      term *= BigFloat(factor);
      term /= BigFloat(8 * k) * x;
      BigFloat size = abs(term);
      if (size <= tol) {
        done = true;
        break;
      }
      if (size > previous && k > 2 * alpha + 2) break;
      previous = size;
      // a_k / x^k enters P (k even) or Q (k odd) with sign (-1)^{floor(k/2)}.
      bool negative = (k / 2) % 2 == 1;
      if (k % 2 == 0) {
        P += negative ? -term : term;
      } else {
        Q += negative ? -term : term;
      }
    }
    if (!done) {
      throw SeriesNotConverged("Hankel expansion of J_alpha does not reach the target precision at x=" +
                               x.to_string(6));
    }
    BigFloat omega = x - pi() * BigFloat(2 * alpha + 1) / BigFloat(4);
    result = sqrt(BigFloat(2) / (pi() * x)) * (P * cos(omega) - Q * sin(omega));
  }
  PrecisionGuard out(p);
  return result.rounded();
}

namespace {

BigFloat bessel_j_value(int alpha, const BigFloat& x, const SeriesPolicy& policy) {
  if (x.sign() < 0) throw std::domain_error("bessel_j: requires x >= 0");
  if (x.to_double() < policy.bessel_crossover()) return bessel_j_series(alpha, x, policy);
  return bessel_j_asymptotic(alpha, x, policy);
}

}  // namespace

BesselJValue bessel_j(int alpha, const BigFloat& x, const SeriesPolicy& policy) {
  check_order(alpha);
  BigFloat value = bessel_j_value(alpha, x, policy);
  BigFloat derivative;
  if (alpha == 0) {
    derivative = -bessel_j_value(1, x, policy);
  } else {
    derivative = (bessel_j_value(alpha - 1, x, policy) - bessel_j_value(alpha + 1, x, policy)) / BigFloat(2);
  }
  return {value, derivative};
}

}  // namespace cplab
