#include "cplab/specfun/laguerre.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cplab {
namespace {

void check_indices(int n, int alpha) {
  if (n < 0 || n + alpha < 0) {
    throw std::invalid_argument("laguerre: need n >= 0 and n + alpha >= 0 (n=" + std::to_string(n) +
                                ", alpha=" + std::to_string(alpha) + ")");
  }
}

}  // namespace

Polynomial laguerre_polynomial(int n, int alpha) {
  check_indices(n, alpha);
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational c{binomial(n + alpha, n - k)};
    c /= factorial(static_cast<unsigned>(k));
    if (k % 2 == 1) c = -c;
    coeffs[static_cast<std::size_t>(k)] = c;
  }
  return Polynomial(std::move(coeffs));
}

Rational laguerre(int n, int alpha, const Rational& x) { return laguerre_polynomial(n, alpha).eval(x); }

BigFloat laguerre(int n, int alpha, const BigFloat& x) {
  check_indices(n, alpha);
  // Horner on the definition sum, with term ratios kept exact.
  BigFloat acc = 0;
  for (int k = n; k >= 0; --k) {
    Rational c{binomial(n + alpha, n - k)};
    c /= factorial(static_cast<unsigned>(k));
    if (k % 2 == 1) c = -c;
    acc = acc * x + BigFloat(c);
  }
  return acc;
}

}  // namespace cplab
