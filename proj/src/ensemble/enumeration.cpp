#include "cplab/ensemble/enumeration.hpp"

#include <string>

namespace cplab {

std::vector<QComplex> characteristic_coefficients(const DenseMatrix<QComplex>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const int k = a.rows();
  // det(t I - A) = sum_j p_j t^j with p_k = 1; M_j = A M_{j-1} + p_{k-j+1} I,
  // p_{k-j} = -tr(A M_j) / j.
  std::vector<QComplex> p(static_cast<std::size_t>(k) + 1);
  p[k] = QComplex(1);
  DenseMatrix<QComplex> mat(k, k);
  for (int j = 1; j <= k; ++j) {
    DenseMatrix<QComplex> next(k, k);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) {
        QComplex s;
        for (int t = 0; t < k; ++t) s = s + a(r, t) * mat(t, c);
        next(r, c) = s;
      }
      next(r, r) = next(r, r) + p[k - j + 1];
    }
    mat = std::move(next);
    QComplex trace;
    for (int r = 0; r < k; ++r)
      for (int t = 0; t < k; ++t) trace = trace + a(r, t) * mat(t, r);
    p[k - j] = -(trace / QComplex(Rational(j)));
  }
  if (k % 2 == 1) {
    for (auto& c : p) c = -c;
  }
  return p;
}

BivariatePolynomial brute_force_polynomial(int n, int m, Variant variant) {
  if (m < 1 || n < m) throw std::invalid_argument("brute_force_polynomial: need n >= m >= 1");
  const bool complex = variant == Variant::Complex;
  const int bits = (complex ? 2 : 1) * n * m;
  if (bits > 24) {
    throw StateSpaceTooLarge("brute_force_polynomial: 2^" + std::to_string(bits) + " states exceed 2^24");
  }
  const std::uint64_t states = std::uint64_t{1} << bits;
  // With Y = sqrt(2) X in the complex case, Y has entries +-1 +- i and
  // X^*X = Y^*Y / 2.
  const Rational scale = complex ? Rational(1, 2) : Rational(1);

  std::vector<Rational> acc(static_cast<std::size_t>(m + 1) * (m + 1));
  DenseMatrix<QComplex> y(n, m);
  for (std::uint64_t s = 0; s < states; ++s) {
    int bit = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        Rational re = ((s >> bit++) & 1) ? 1 : -1;
        Rational im = 0;
        if (complex) im = ((s >> bit++) & 1) ? 1 : -1;
        y(i, j) = QComplex(re, im);
      }
    }
    DenseMatrix<QComplex> g = gram(y);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) g(i, j) = g(i, j) * QComplex(scale);
    std::vector<QComplex> p = characteristic_coefficients(g);
    for (int i = 0; i <= m; ++i) {
      if (!p[i].is_real()) throw std::logic_error("brute_force_polynomial: non-real characteristic coefficient");
      for (int j = 0; j <= m; ++j) acc[static_cast<std::size_t>(i) * (m + 1) + j] += p[i].re * p[j].re;
    }
  }

  std::vector<BivariatePolynomial::Term> terms;
  const Rational inv(Integer(1), Integer(states));
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) terms.push_back({i, j, acc[static_cast<std::size_t>(i) * (m + 1) + j] * inv});
  return BivariatePolynomial::from_terms(std::move(terms));
}

Rational brute_force_expectation(int n, int m, Variant variant, const Rational& mu, const Rational& nu) {
  return brute_force_polynomial(n, m, variant).eval(mu, nu);
}

namespace {

QComplex rational_power(const Rational& x, int e) {
  Rational r = 1;
  Rational base = e >= 0 ? x : Rational(1) / x;
  for (int k = 0; k < (e >= 0 ? e : -e); ++k) r *= base;
  return QComplex(r);
}

}  // namespace

ChiralDeterminants chiral_determinants(const Rational& lambda, const DenseMatrix<QComplex>& x) {
  if (lambda == 0) throw std::invalid_argument("chiral_determinants: lambda must be nonzero");
  const int n = x.rows();
  const int m = x.cols();
  DenseMatrix<QComplex> block(n + m, n + m);
  for (int i = 0; i < n; ++i) block(i, i) = QComplex(lambda);
  for (int i = 0; i < m; ++i) block(n + i, n + i) = QComplex(lambda);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      block(i, n + j) = x(i, j);
      block(n + j, i) = conj(x(i, j));
    }
  }
  const QComplex l2(lambda * lambda);
  DenseMatrix<QComplex> g = gram(x);
  DenseMatrix<QComplex> h = cogram(x);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = (i == j ? l2 : QComplex()) - g(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = (i == j ? l2 : QComplex()) - h(i, j);
  return {determinant_exact(block), determinant_exact(g) * rational_power(lambda, n - m),
          determinant_exact(h) * rational_power(lambda, m - n)};
}

bool chiral_identity_check(int n, int m, const Rational& lambda, const DenseMatrix<QComplex>& x) {
  if (x.rows() != n || x.cols() != m) throw std::invalid_argument("chiral_identity_check: X must be n x m");
  ChiralDeterminants d = chiral_determinants(lambda, x);
  return d.block == d.via_gram && d.block == d.via_cogram;
}

}  // namespace cplab
