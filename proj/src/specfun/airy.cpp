#include "cplab/specfun/airy.hpp"

#include <cmath>
#include <string>

namespace cplab {
namespace {

double airy_zeta(const BigFloat& x) { return 2.0 / 3.0 * std::pow(std::fabs(x.to_double()), 1.5); }

}  // namespace

AiryValue airy_series(const BigFloat& x, const SeriesPolicy& policy) {
  const mpfr_prec_t p = policy.effective_precision();
  const double zeta = airy_zeta(x);
  const double xabs = std::fabs(x.to_double());
  const mpfr_prec_t bits = p + static_cast<mpfr_prec_t>(std::ceil(2.9 * zeta)) + 24;
  AiryValue out;
  {
    PrecisionGuard g(bits);
    const BigFloat x3 = x * x * x;
    // Ai(0) = 1 / (3^{2/3} Gamma(2/3)), -Ai'(0) = 1 / (3^{1/3} Gamma(1/3)).
    const BigFloat c1 = BigFloat(1) / (cbrt(BigFloat(9)) * gamma(BigFloat(2) / BigFloat(3)));
    const BigFloat c2 = BigFloat(1) / (cbrt(BigFloat(3)) * gamma(BigFloat(1) / BigFloat(3)));
    BigFloat f(1), fp(0), gv = x, gp(1);
    BigFloat tf(1), tfp = x * x / BigFloat(2), tg = x, tgp(1);
    fp = tfp;
    const BigFloat tol = ldexp(BigFloat(1), -static_cast<long>(bits) - 4);
    bool converged = false;
    for (long k = 1; k <= policy.max_terms; ++k) {
      tf *= x3 / BigFloat((3 * k - 1) * (3 * k));
      tg *= x3 / BigFloat((3 * k) * (3 * k + 1));
      tgp *= x3 / BigFloat((3 * k) * (3 * k - 2));
      if (k >= 2) {
        tfp *= x3 / BigFloat((3 * k - 3) * (3 * k - 1));
        fp += tfp;
      }
      f += tf;
      gv += tg;
      gp += tgp;
      if (9.0 * static_cast<double>(k) * static_cast<double>(k) > xabs * xabs * xabs) {
        BigFloat largest = max(max(abs(tf), abs(tfp)), max(abs(tg), abs(tgp)));
        if (largest <= tol) {
          converged = true;
          break;
        }
      }
    }
    if (!converged) throw SeriesNotConverged("Airy Maclaurin series exceeded the term budget");
    out.ai = c1 * f - c2 * gv;
    out.ai_prime = c1 * fp - c2 * gp;
  }
  PrecisionGuard back(p);
  return {out.ai.rounded(), out.ai_prime.rounded()};
}

AiryValue airy_asymptotic(const BigFloat& x, const SeriesPolicy& policy) {
  const mpfr_prec_t p = policy.effective_precision();
  if (x.is_zero()) throw SeriesNotConverged("Airy asymptotic expansion is not defined at x = 0");
  AiryValue out;
  {
    PrecisionGuard g(p + 32);
    const BigFloat t = abs(x);
    const BigFloat zeta = BigFloat(2) / BigFloat(3) * t * sqrt(t);
    const BigFloat inv = BigFloat(1) / zeta;
    const BigFloat tol = ldexp(BigFloat(1), -static_cast<long>(p) - 8);
    // Sums of u_k / zeta^k and v_k / zeta^k, split by parity and sign pattern.
    BigFloat u_all(1), v_all(1);        // sum (-1)^k u_k zeta^{-k}, same for v
    BigFloat u_even(1), u_odd(0);       // sum (-1)^k u_{2k} zeta^{-2k}, sum (-1)^k u_{2k+1} zeta^{-2k-1}
    BigFloat v_even(1), v_odd(0);
    BigFloat u_term(1);
    BigFloat previous(1);
    bool converged = false;
    for (long k = 1; k <= policy.max_terms; ++k) {
      u_term *= BigFloat((6 * k - 5) * (6 * k - 3) * (6 * k - 1)) / BigFloat((2 * k - 1) * 216 * k);
      u_term *= inv;
      BigFloat v_term = -u_term * BigFloat(6 * k + 1) / BigFloat(6 * k - 1);
      BigFloat size = max(abs(u_term), abs(v_term));
      if (size <= tol) {
        converged = true;
        break;
      }
      if (size > previous && k > 2) break;
      previous = size;
      const bool odd_k = k % 2 == 1;
      u_all += odd_k ? -u_term : u_term;
      v_all += odd_k ? -v_term : v_term;
      const bool negative = (k / 2) % 2 == 1;
      if (odd_k) {
        u_odd += negative ? -u_term : u_term;
        v_odd += negative ? -v_term : v_term;
      } else {
        u_even += negative ? -u_term : u_term;
        v_even += negative ? -v_term : v_term;
      }
    }
    if (!converged) {
      throw SeriesNotConverged("Airy asymptotic expansion does not reach " + std::to_string(p) + " bits at x=" +
                               x.to_string(6));
    }
    const BigFloat root_pi = sqrt(pi());
    const BigFloat quarter = sqrt(sqrt(t));
    if (x.sign() > 0) {
      const BigFloat decay = exp(-zeta) / (BigFloat(2) * root_pi);
      out.ai = decay / quarter * u_all;
      out.ai_prime = -decay * quarter * v_all;
    } else {
      const BigFloat phase = zeta - pi() / BigFloat(4);
      const BigFloat c = cos(phase);
      const BigFloat s = sin(phase);
      out.ai = (c * u_even + s * u_odd) / (root_pi * quarter);
      out.ai_prime = quarter / root_pi * (s * v_even - c * v_odd);
    }
  }
  PrecisionGuard back(p);
  return {out.ai.rounded(), out.ai_prime.rounded()};
}

AiryValue airy(const BigFloat& x, const SeriesPolicy& policy) {
  if (airy_zeta(x) < policy.airy_zeta_crossover()) return airy_series(x, policy);
  return airy_asymptotic(x, policy);
}

}  // namespace cplab
