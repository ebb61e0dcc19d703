#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cplab/polycore/bigfloat.hpp"
#include "cplab/polycore/rational.hpp"

namespace cplab {

/// Exact polynomial in two variables (mu, nu) with rational coefficients.
/// Terms are kept sorted by (i, j) = (degree in mu, degree in nu) and zero
/// coefficients are never stored, so equality is structural.
class BivariatePolynomial {
 public:
  struct Term {
    int i = 0;
    int j = 0;
    Rational c;
    friend bool operator==(const Term& a, const Term& b) { return a.i == b.i && a.j == b.j && a.c == b.c; }
  };

  BivariatePolynomial() = default;
  /// Constant polynomial.
  explicit BivariatePolynomial(const Rational& c);
  /// Single term c * mu^i * nu^j.
  static BivariatePolynomial monomial(const Rational& c, int i, int j);
  static BivariatePolynomial mu() { return monomial(1, 1, 0); }
  static BivariatePolynomial nu() { return monomial(1, 0, 1); }
  /// Builds from arbitrary (possibly unsorted, duplicated or zero) terms.
  static BivariatePolynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(int i, int j) const;

  /// Highest power of mu (resp. nu); -1 for the zero polynomial.
  int degree_mu() const;
  int degree_nu() const;
  int total_degree() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator-=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator*=(const BivariatePolynomial& rhs);
  BivariatePolynomial& operator*=(const Rational& c);
  BivariatePolynomial operator-() const;

  /// this += c * mu^di * nu^dj * p, without temporaries for the shifted copy.
  void add_scaled(const BivariatePolynomial& p, const Rational& c, int di = 0, int dj = 0);

  /// Multiplies by mu^di * nu^dj.
  BivariatePolynomial shifted(int di, int dj) const;
  /// Exchanges the roles of mu and nu.
  BivariatePolynomial swapped() const;
  /// Keeps only terms whose exponents satisfy pred(i, j).
  template <class Pred>
  BivariatePolynomial filtered(Pred pred) const {
    BivariatePolynomial r;
    for (const auto& t : terms_) {
      if (pred(t.i, t.j)) r.terms_.push_back(t);
    }
    return r;
  }
  /// Applies (i, j) -> map(i, j) to every exponent; the map must be injective.
  template <class Map>
  BivariatePolynomial remapped(Map map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      auto [i, j] = map(t.i, t.j);
      out.push_back({i, j, t.c});
    }
    return from_terms(std::move(out));
  }

  Rational eval(const Rational& mu, const Rational& nu) const;
  BigFloat eval(const BigFloat& mu, const BigFloat& nu) const;

  /// Human-readable form such as "mu*nu - mu - nu + 5/2".
  std::string to_string() const;

  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Term> terms_;
};

BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b);
BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b);
BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
BivariatePolynomial operator*(BivariatePolynomial a, const Rational& c);
BivariatePolynomial operator*(const Rational& c, BivariatePolynomial a);

enum class PolyOp { Add, Sub, Mul };

BivariatePolynomial poly_arith(const BivariatePolynomial& a, const BivariatePolynomial& b, PolyOp op);
Rational poly_eval(const BivariatePolynomial& p, const Rational& mu, const Rational& nu);
BigFloat poly_eval(const BivariatePolynomial& p, const BigFloat& mu, const BigFloat& nu);

/// Exact dense polynomial in one variable.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial monomial(const Rational& c, int degree);

  /// Coefficients from degree 0 upward; the leading coefficient is nonzero.
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;
  /// Multiplies by x^k.
  Polynomial shifted(int k) const;

  Rational eval(const Rational& x) const;
  BigFloat eval(const BigFloat& x) const;

  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& c);

}  // namespace cplab
