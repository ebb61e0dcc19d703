#include "cplab/recursion/first_moment.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "cplab/specfun/laguerre.hpp"

namespace cplab {
namespace {

void check_nonnegative(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("first moment: negative dimension");
}

}  // namespace

Polynomial first_moment_recursive(int n, int m) {
  check_nonnegative(n, m);
  const Polynomial lambda = Polynomial::monomial(1, 1);
  // prev[k] holds F(k, j-1) for k = 0..n.
  std::vector<Polynomial> prev(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) prev[static_cast<std::size_t>(k)] = Polynomial::monomial(1, k);
  for (int j = 1; j <= m; ++j) {
    std::vector<Polynomial> cur(prev.size());
    for (int k = 0; k <= n; ++k) {
      Polynomial value = lambda * prev[static_cast<std::size_t>(k)];
      if (k > 0) value -= prev[static_cast<std::size_t>(k - 1)] * Rational(k);
      cur[static_cast<std::size_t>(k)] = std::move(value);
    }
    prev = std::move(cur);
  }
  return prev[static_cast<std::size_t>(n)];
}

Polynomial first_moment_recursive_n(int n, int m) {
  check_nonnegative(n, m);
  const Polynomial lambda = Polynomial::monomial(1, 1);
  std::vector<Polynomial> prev(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) prev[static_cast<std::size_t>(j)] = Polynomial::monomial(1, j);
  for (int k = 1; k <= n; ++k) {
    std::vector<Polynomial> cur(prev.size());
    for (int j = 0; j <= m; ++j) {
      Polynomial value = lambda * prev[static_cast<std::size_t>(j)];
      if (j > 0) value -= prev[static_cast<std::size_t>(j - 1)] * Rational(j);
      cur[static_cast<std::size_t>(j)] = std::move(value);
    }
    prev = std::move(cur);
  }
  return prev[static_cast<std::size_t>(m)];
}

Polynomial first_moment_covariance(int n, int m) {
  if (n < m) throw std::invalid_argument("first_moment_covariance: need n >= m");
  Polynomial chiral = first_moment_recursive(n, m);
  const int shift = n - m;
  std::vector<Rational> out(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= chiral.degree(); ++k) {
    Rational c = chiral.coefficient(k);
    if (c == 0) continue;
    int e = k - shift;
    if (e < 0 || e % 2 != 0) {
      throw std::logic_error("first_moment_covariance: chiral moment has unexpected term lambda^" +
                             std::to_string(k));
    }
    out[static_cast<std::size_t>(e / 2)] = c;
  }
  return Polynomial(std::move(out));
}

Rational first_moment_laguerre(int n, int m, const Rational& lambda) {
  if (m < 0 || n < m) {
    throw std::invalid_argument("first_moment_laguerre: need n >= m >= 0 (n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ")");
  }
  Rational value = laguerre(m, n - m, lambda) * factorial(static_cast<unsigned>(m));
  return m % 2 == 0 ? value : Rational(-value);
}

}  // namespace cplab
