#include "cplab/recursion/generating_function.hpp"

#include <stdexcept>

namespace cplab {
namespace {

using P = BivariatePolynomial;

void check_args(int alpha, int m) {
  if (alpha < 0 || m < 0) throw std::invalid_argument("generating function: alpha and m must be >= 0");
}

// Taylor coefficients of exp(-(mu+nu) z/(1-z) + b* z) through z^order, from
// k e_k = sum_{j=1..k} j a_j e_{k-j} where a_j are the exponent's coefficients.
std::vector<P> exponential_factor(const EnsembleSpec& ensemble, int order) {
  const P minus_sum = -(P::mu() + P::nu());
  std::vector<P> e(static_cast<std::size_t>(order) + 1);
  e[0] = P(1);
  for (int k = 1; k <= order; ++k) {
    P acc;
    for (int j = 1; j <= k; ++j) {
      const P& prev = e[static_cast<std::size_t>(k - j)];
      acc += minus_sum * prev * Rational(j);
      if (j == 1) acc.add_scaled(prev, ensemble.bstar());
    }
    acc *= Rational(1, k);
    e[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return e;
}

// Coefficients of sum_k (mu nu z)^k / ((k+alpha)! k!) (1-z)^{-2k-alpha-p}.
std::vector<P> bessel_factor(const EnsembleSpec& ensemble, int alpha, int order) {
  const int p = ensemble.pole_order();
  std::vector<P> s(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    std::vector<P::Term> terms;
    for (int k = 0; k <= j; ++k) {
      Rational c{binomial(2 * k + alpha + p - 1 + (j - k), j - k)};
      c /= factorial(static_cast<unsigned>(k + alpha));
      c /= factorial(static_cast<unsigned>(k));
      terms.push_back({k, k, c});
    }
    s[static_cast<std::size_t>(j)] = P::from_terms(std::move(terms));
  }
  return s;
}

std::vector<P> convolve(const std::vector<P>& a, const std::vector<P>& b, int order) {
  std::vector<P> out(static_cast<std::size_t>(order) + 1);
  for (int m = 0; m <= order; ++m) {
    P acc;
    for (int j = 0; j <= m; ++j) acc += a[static_cast<std::size_t>(m - j)] * b[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(m)] = std::move(acc);
  }
  return out;
}

template <class Coef>
OdeCheckResult ode_residual(const EnsembleSpec& ensemble, int alpha, int order, const std::vector<Coef>& fa,
                            const std::vector<Coef>& fb, const Coef& prod, const Coef& sum,
                            const Rational& bstar) {
  // Coefficient of z^k on both sides; needs fa up to k+1 and fb up to k.
  auto at = [](const std::vector<Coef>& v, int k) -> Coef { return k < 0 ? Coef(0) : v[static_cast<std::size_t>(k)]; };
  const Rational ap(alpha + ensemble.pole_order());
  for (int k = 0; k < order; ++k) {
    // (1 - 2z + z^2) F' with F'_k = (k+1) c(k+1)
    Coef lhs = at(fa, k + 1) * Rational(k + 1);
    if (k >= 1) lhs -= at(fa, k) * Rational(2 * k);
    if (k >= 2) lhs += at(fa, k - 1) * Rational(k - 1);
    Coef rhs = (at(fa, k) - at(fa, k - 1)) * ap;
    rhs += (at(fa, k) - at(fa, k - 1) * Rational(2) + at(fa, k - 2)) * bstar;
    rhs -= sum * at(fa, k);
    rhs += prod * (at(fb, k) + at(fb, k - 1));
    if (!(lhs == rhs)) return {false, k + 1};
  }
  return {};
}

}  // namespace

std::vector<P> gf_coeffs_recursive(const EnsembleSpec& ensemble, int alpha, int m_max) {
  check_args(alpha, m_max);
  const Rational& bstar = ensemble.bstar();
  const long s = ensemble.is_real() ? 1 : 0;
  // rows[d][j] = c_{alpha+d}(j) for d <= m_max - j.
  const int width = m_max + 1;
  std::vector<std::vector<P>> rows(static_cast<std::size_t>(width));
  for (int d = 0; d < width; ++d) {
    rows[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(width - d));
    rows[static_cast<std::size_t>(d)][0] = P(Rational(1) / Rational(factorial(static_cast<unsigned>(alpha + d))));
  }
  static const P kZero;
  for (int j = 1; j <= m_max; ++j) {
    for (int d = 0; d <= m_max - j; ++d) {
      const long a = alpha + d;
      const auto& row = rows[static_cast<std::size_t>(d)];
      const auto& up = rows[static_cast<std::size_t>(d + 1)];
      const P& c1 = row[static_cast<std::size_t>(j - 1)];
      const P& c2 = j >= 2 ? row[static_cast<std::size_t>(j - 2)] : kZero;
      const P& c3 = j >= 3 ? row[static_cast<std::size_t>(j - 3)] : kZero;
      const P& u1 = up[static_cast<std::size_t>(j - 1)];
      const P& u2 = j >= 2 ? up[static_cast<std::size_t>(j - 2)] : kZero;
      P v;
      v.add_scaled(c1, Rational(2 * j + a + s) + bstar);
      v.add_scaled(c2, Rational(-(j + a + s)) - 2 * bstar);
      v.add_scaled(c3, bstar);
      v.add_scaled(u1, 1, 1, 1);
      v.add_scaled(u2, 1, 1, 1);
      v.add_scaled(c1, -1, 1, 0);
      v.add_scaled(c1, -1, 0, 1);
      v *= Rational(1, j);
      rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)] = std::move(v);
    }
  }
  return rows[0];
}

P gf_coeff_recursive(const EnsembleSpec& ensemble, int alpha, int m) {
  check_args(alpha, m);
  return gf_coeffs_recursive(ensemble, alpha, m)[static_cast<std::size_t>(m)];
}

std::vector<P> gf_coeffs_closed(const EnsembleSpec& ensemble, int alpha, int m_max) {
  check_args(alpha, m_max);
  return convolve(exponential_factor(ensemble, m_max), bessel_factor(ensemble, alpha, m_max), m_max);
}

P gf_coeff_closed(const EnsembleSpec& ensemble, int alpha, int m) {
  check_args(alpha, m);
  return gf_coeffs_closed(ensemble, alpha, m)[static_cast<std::size_t>(m)];
}

OdeCheckResult gf_ode_check(const EnsembleSpec& ensemble, int alpha, int order, const Rational& bstar_shift) {
  if (order < 1) throw std::invalid_argument("gf_ode_check: order must be >= 1");
  check_args(alpha, order);
  std::vector<P> fa = gf_coeffs_closed(ensemble, alpha, order);
  std::vector<P> fb = gf_coeffs_closed(ensemble, alpha + 1, order);
  return ode_residual<P>(ensemble, alpha, order, fa, fb, P::monomial(1, 1, 1), P::mu() + P::nu(),
                         ensemble.bstar() + bstar_shift);
}

OdeCheckResult gf_ode_check(const EnsembleSpec& ensemble, int alpha, int order, const Rational& mu,
                            const Rational& nu, const Rational& bstar_shift) {
  if (order < 1) throw std::invalid_argument("gf_ode_check: order must be >= 1");
  check_args(alpha, order);
  auto evaluate = [&](const std::vector<P>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.eval(mu, nu));
    return out;
  };
  std::vector<Rational> fa = evaluate(gf_coeffs_closed(ensemble, alpha, order));
  std::vector<Rational> fb = evaluate(gf_coeffs_closed(ensemble, alpha + 1, order));
  return ode_residual<Rational>(ensemble, alpha, order, fa, fb, Rational(mu * nu), Rational(mu + nu),
                                ensemble.bstar() + bstar_shift);
}

}  // namespace cplab
