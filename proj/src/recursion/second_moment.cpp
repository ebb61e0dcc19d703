#include "cplab/recursion/second_moment.hpp"

#include <cmath>
#include <string>

namespace cplab {
namespace {

// Coefficients shared by both covariance recursions; `k` is n for the
// m-direction and m for the n-direction.
struct StepCoefficients {
  Rational lead;       // multiplies f(n-1, m-1)
  Rational second;     // multiplies f(n-2, m-2), subtracted
  Rational bracket;    // b* k
};

StepCoefficients m_direction(const EnsembleSpec& e, long n, long m) {
  if (e.is_real()) {
    return {Rational(n * (n + m + 1)), Rational((n + 1) * n * (n - 1) * (m - 1)), Rational(e.bstar() * n)};
  }
  return {Rational(n * (n + m)), Rational(n * n * (n - 1) * (m - 1)), Rational(e.bstar() * n)};
}

StepCoefficients n_direction(const EnsembleSpec& e, long n, long m) {
  if (e.is_real()) {
    return {Rational((n + m + 1) * m), Rational((n - 1) * (m + 1) * m * (m - 1)), Rational(e.bstar() * m)};
  }
  return {Rational((n + m) * m), Rational((n - 1) * m * m * (m - 1)), Rational(e.bstar() * m)};
}

void check_order(int n, int m, const char* what) {
  if (m < 0 || n < m) {
    throw std::invalid_argument(std::string(what) + ": need n >= m >= 0 (n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ")");
  }
}

}  // namespace

MomentTable::MomentTable(EnsembleSpec ensemble, int n_max, int m_max)
    : ensemble_(std::move(ensemble)),
      n_max_(n_max),
      m_max_(m_max),
      entries_(static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(m_max + 1)) {}

BivariatePolynomial& MomentTable::cell(int n, int m) {
  return entries_[static_cast<std::size_t>(n) * static_cast<std::size_t>(m_max_ + 1) + m];
}

const BivariatePolynomial& MomentTable::at(int n, int m) const {
  if (n < 0 || m < 0 || n > n_max_ || m > m_max_) {
    throw std::out_of_range("MomentTable: (" + std::to_string(n) + "," + std::to_string(m) + ") not in table");
  }
  return entries_[static_cast<std::size_t>(n) * static_cast<std::size_t>(m_max_ + 1) + m];
}

MomentTable MomentTable::from_entries(const EnsembleSpec& ensemble, int n_max, int m_max,
                                      std::vector<BivariatePolynomial> entries) {
  MomentTable t(ensemble, n_max, m_max);
  if (entries.size() != t.entries_.size()) throw std::invalid_argument("MomentTable: entry count mismatch");
  t.entries_ = std::move(entries);
  return t;
}

MomentTable MomentTable::build(const EnsembleSpec& ensemble, int n_max, int m_max, RecursionDirection direction) {
  if (n_max < 0 || m_max < 0) throw std::invalid_argument("MomentTable: negative size");
  MomentTable t(ensemble, n_max, m_max);
  static const BivariatePolynomial kZero;
  auto f = [&t](int n, int m) -> const BivariatePolynomial& {
    if (n < 0 || m < 0) return kZero;
    return t.cell(n, m);
  };
  auto add_bracket = [&f](BivariatePolynomial& out, int n, int m, const Rational& scale) {
    if (scale == 0) return;
    out.add_scaled(f(n - 1, m - 1), scale);
    out.add_scaled(f(n - 2, m - 2), Rational(-2 * (n - 1) * (m - 1)) * scale);
    out.add_scaled(f(n - 3, m - 3), Rational((n - 1) * (n - 2)) * Rational((m - 1) * (m - 2)) * scale);
  };

  auto compute = [&](int n, int m) {
    if (m == 0) {
      t.cell(n, m) = BivariatePolynomial(1);
      return;
    }
    if (n == 0) {
      t.cell(n, m) = BivariatePolynomial::monomial(1, m, m);
      return;
    }
    BivariatePolynomial v;
    if (direction == RecursionDirection::M) {
      StepCoefficients c = m_direction(ensemble, n, m);
      v.add_scaled(f(n - 1, m - 1), c.lead);
      v.add_scaled(f(n - 2, m - 2), -c.second);
      add_bracket(v, n, m, c.bracket);
      v.add_scaled(f(n, m - 1), 1, 1, 1);
      v.add_scaled(f(n - 1, m - 2), Rational(n * (m - 1)), 1, 1);
      v.add_scaled(f(n - 1, m - 1), Rational(-n), 1, 0);
      v.add_scaled(f(n - 1, m - 1), Rational(-n), 0, 1);
    } else {
      StepCoefficients c = n_direction(ensemble, n, m);
      v.add_scaled(f(n - 1, m - 1), c.lead);
      v.add_scaled(f(n - 2, m - 2), -c.second);
      add_bracket(v, n, m, c.bracket);
      v.add_scaled(f(n - 1, m), 1);
      v.add_scaled(f(n - 2, m - 1), Rational((n - 1) * m));
      v.add_scaled(f(n - 1, m - 1), Rational(-m), 1, 0);
      v.add_scaled(f(n - 1, m - 1), Rational(-m), 0, 1);
    }
    t.cell(n, m) = std::move(v);
  };

  if (direction == RecursionDirection::M) {
    for (int m = 0; m <= m_max; ++m) {
      for (int n = 0; n <= n_max; ++n) compute(n, m);
    }
  } else {
    for (int n = 0; n <= n_max; ++n) {
      for (int m = 0; m <= m_max; ++m) compute(n, m);
    }
  }
  return t;
}

BivariatePolynomial second_moment_exact(const EnsembleSpec& ensemble, int n, int m) {
  check_order(n, m, "second_moment_exact");
  return MomentTable::build(ensemble, n, m, RecursionDirection::M).at(n, m);
}

BivariatePolynomial second_moment_exact_alt(const EnsembleSpec& ensemble, int n, int m) {
  check_order(n, m, "second_moment_exact_alt");
  return MomentTable::build(ensemble, n, m, RecursionDirection::N).at(n, m);
}

BivariatePolynomial second_moment(const EnsembleSpec& ensemble, int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("second_moment: negative dimension");
  if (n >= m) return second_moment_exact(ensemble, n, m);
  return second_moment_exact(ensemble, m, n).shifted(m - n, m - n);
}

namespace {

// g(a, j) = f(j + a, j) / ((j + a)! j!) for the fixed alpha block needed by
// (alpha, m); the m-direction recursion divided through by n! m! reads
//   j g(a,j) = (2j + a + s) g(a,j-1) - (j + a + s) g(a,j-2)
//            + b* (g(a,j-1) - 2 g(a,j-2) + g(a,j-3))
//            + mu nu (g(a+1,j-1) + g(a+1,j-2)) - (mu + nu) g(a,j-1)
// with s = 0 (complex) or 1 (real).
BigFloat normalized_moment(const EnsembleSpec& ensemble, int alpha, int m, const BigFloat& mu_in,
                           const BigFloat& nu_in) {
  const BigFloat mu = mu_in + BigFloat(0);  // re-round inputs at the working precision
  const BigFloat nu = nu_in + BigFloat(0);
  const BigFloat prod = mu * nu;
  const BigFloat sum = mu + nu;
  const BigFloat bstar(ensemble.bstar());
  const long s = ensemble.is_real() ? 1 : 0;
  const int width = m + 1;
  // rows[a - alpha][j], valid for a - alpha <= m - j.
  std::vector<std::vector<BigFloat>> rows(static_cast<std::size_t>(width));
  BigFloat inv_fact = BigFloat(1) / BigFloat(factorial(static_cast<unsigned>(alpha)));
  for (int d = 0; d < width; ++d) {
    rows[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(width - d));
    if (d > 0) inv_fact /= BigFloat(alpha + d);
    rows[static_cast<std::size_t>(d)][0] = inv_fact;
  }
  const BigFloat zero(0);
  for (int j = 1; j <= m; ++j) {
    for (int d = 0; d <= m - j; ++d) {
      const long a = alpha + d;
      const auto& row = rows[static_cast<std::size_t>(d)];
      const auto& up = rows[static_cast<std::size_t>(d + 1)];
      const BigFloat& g1 = row[static_cast<std::size_t>(j - 1)];
      const BigFloat& g2 = j >= 2 ? row[static_cast<std::size_t>(j - 2)] : zero;
      const BigFloat& g3 = j >= 3 ? row[static_cast<std::size_t>(j - 3)] : zero;
      const BigFloat& h1 = up[static_cast<std::size_t>(j - 1)];
      const BigFloat& h2 = j >= 2 ? up[static_cast<std::size_t>(j - 2)] : zero;
      BigFloat v = BigFloat(2 * j + a + s) * g1 - BigFloat(j + a + s) * g2;
      v += bstar * (g1 - BigFloat(2) * g2 + g3);
      v += prod * (h1 + h2) - sum * g1;
      v /= BigFloat(j);
      rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(j)] = std::move(v);
    }
  }
  return rows[0][static_cast<std::size_t>(m)];
}

}  // namespace

NumericMoment second_moment_numeric(const EnsembleSpec& ensemble, int n, int m, const BigFloat& mu,
                                    const BigFloat& nu, mpfr_prec_t precision, double max_rel_error) {
  check_order(n, m, "second_moment_numeric");
  if (precision < 64) throw std::invalid_argument("second_moment_numeric: precision must be >= 64 bits");
  BigFloat value;
  BigFloat reference;
  {
    PrecisionGuard guard(precision);
    value = normalized_moment(ensemble, n - m, m, mu, nu);
  }
  {
    PrecisionGuard guard(precision + 64);
    reference = normalized_moment(ensemble, n - m, m, mu, nu);
  }
  double err;
  {
    PrecisionGuard guard(precision + 64);
    BigFloat diff = relative_difference(value, reference);
    err = diff.is_zero() ? std::ldexp(1.0, -static_cast<int>(std::min<mpfr_prec_t>(precision, 1000)))
                         : diff.to_double();
  }
  if (max_rel_error <= 0) max_rel_error = std::ldexp(1.0, -static_cast<int>(precision / 2));
  if (!(err <= max_rel_error)) {
    throw PrecisionUnderflow("second_moment_numeric: cancellation at " + std::to_string(precision) +
                             " bits leaves relative error ~" + std::to_string(err) + " (budget " +
                             std::to_string(max_rel_error) + ")");
  }
  return {value, err, precision};
}

NumericMoment second_moment_numeric_auto(const EnsembleSpec& ensemble, int n, int m, const BigFloat& mu,
                                         const BigFloat& nu, double target_rel_error, mpfr_prec_t start_precision,
                                         mpfr_prec_t max_precision) {
  for (mpfr_prec_t p = std::max<mpfr_prec_t>(64, start_precision); p <= max_precision; p *= 2) {
    try {
      return second_moment_numeric(ensemble, n, m, mu, nu, p, target_rel_error);
    } catch (const PrecisionUnderflow&) {
    }
  }
  throw PrecisionUnderflow("second_moment_numeric_auto: target " + std::to_string(target_rel_error) +
                           " not reached below " + std::to_string(max_precision) + " bits");
}

}  // namespace cplab
