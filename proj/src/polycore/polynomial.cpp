#include "cplab/polycore/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cplab {
namespace {

bool key_less(const BivariatePolynomial::Term& a, const BivariatePolynomial::Term& b) {
  return a.i != b.i ? a.i < b.i : a.j < b.j;
}

// Merges sorted `a` with `scale * mu^di nu^dj * b`, dropping cancelled terms.
std::vector<BivariatePolynomial::Term> merge_scaled(const std::vector<BivariatePolynomial::Term>& a,
                                                    const std::vector<BivariatePolynomial::Term>& b,
                                                    const Rational& scale, int di, int dj) {
  std::vector<BivariatePolynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t ia = 0;
  std::size_t ib = 0;
  while (ia < a.size() || ib < b.size()) {
    if (ib == b.size()) {
      out.push_back(a[ia++]);
      continue;
    }
    BivariatePolynomial::Term tb{b[ib].i + di, b[ib].j + dj, 0};
    if (ia == a.size() || key_less(tb, a[ia])) {
      tb.c = b[ib++].c * scale;
      out.push_back(std::move(tb));
      continue;
    }
    if (key_less(a[ia], tb)) {
      out.push_back(a[ia++]);
      continue;
    }
    Rational c = a[ia].c + b[ib].c * scale;
    if (c != 0) out.push_back({tb.i, tb.j, std::move(c)});
    ++ia;
    ++ib;
  }
  return out;
}

void append_monomial(std::ostringstream& os, const std::string& var, int power) {
  if (power == 0) return;
  os << var;
  if (power > 1) os << "^" << power;
}

}  // namespace

BivariatePolynomial::BivariatePolynomial(const Rational& c) {
  if (c != 0) terms_.push_back({0, 0, c});
}

BivariatePolynomial BivariatePolynomial::monomial(const Rational& c, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("monomial: negative exponent");
  BivariatePolynomial p;
  if (c != 0) p.terms_.push_back({i, j, c});
  return p;
}

BivariatePolynomial BivariatePolynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), key_less);
  BivariatePolynomial p;
  for (auto& t : terms) {
    if (t.i < 0 || t.j < 0) throw std::invalid_argument("from_terms: negative exponent");
    if (!p.terms_.empty() && p.terms_.back().i == t.i && p.terms_.back().j == t.j) {
      p.terms_.back().c += t.c;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.c == 0; });
  return p;
}

Rational BivariatePolynomial::coefficient(int i, int j) const {
  Term key{i, j, 0};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, key_less);
  if (it != terms_.end() && it->i == i && it->j == j) return it->c;
  return 0;
}

int BivariatePolynomial::degree_mu() const { return terms_.empty() ? -1 : terms_.back().i; }

int BivariatePolynomial::degree_nu() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.j);
  return d;
}

int BivariatePolynomial::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.i + t.j);
  return d;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& rhs) {
  terms_ = merge_scaled(terms_, rhs.terms_, 1, 0, 0);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& rhs) {
  terms_ = merge_scaled(terms_, rhs.terms_, -1, 0, 0);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= c;
  return *this;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
  BivariatePolynomial r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

void BivariatePolynomial::add_scaled(const BivariatePolynomial& p, const Rational& c, int di, int dj) {
  if (c == 0 || p.is_zero()) return;
  if (di < 0 || dj < 0) throw std::invalid_argument("add_scaled: negative shift");
  terms_ = merge_scaled(terms_, p.terms_, c, di, dj);
}

BivariatePolynomial BivariatePolynomial::shifted(int di, int dj) const {
  if (di < 0 || dj < 0) throw std::invalid_argument("shifted: negative shift");
  BivariatePolynomial r = *this;
  for (auto& t : r.terms_) {
    t.i += di;
    t.j += dj;
  }
  return r;
}

BivariatePolynomial BivariatePolynomial::swapped() const {
  return remapped([](int i, int j) { return std::pair{j, i}; });
}

Rational BivariatePolynomial::eval(const Rational& mu, const Rational& nu) const {
  // Horner in nu within each mu-degree block, then Horner in mu across blocks.
  Rational acc = 0;
  int current_i = degree_mu();
  std::size_t k = terms_.size();
  while (k > 0) {
    int i = terms_[k - 1].i;
    for (; current_i > i; --current_i) acc *= mu;
    Rational inner = 0;
    int current_j = terms_[k - 1].j;
    while (k > 0 && terms_[k - 1].i == i) {
      const Term& t = terms_[k - 1];
      for (; current_j > t.j; --current_j) inner *= nu;
      inner += t.c;
      --k;
    }
    for (; current_j > 0; --current_j) inner *= nu;
    acc += inner;
  }
  for (; current_i > 0; --current_i) acc *= mu;
  return acc;
}

BigFloat BivariatePolynomial::eval(const BigFloat& mu, const BigFloat& nu) const {
  BigFloat acc = 0;
  int current_i = degree_mu();
  std::size_t k = terms_.size();
  while (k > 0) {
    int i = terms_[k - 1].i;
    for (; current_i > i; --current_i) acc *= mu;
    BigFloat inner = 0;
    int current_j = terms_[k - 1].j;
    while (k > 0 && terms_[k - 1].i == i) {
      const Term& t = terms_[k - 1];
      for (; current_j > t.j; --current_j) inner *= nu;
      inner += BigFloat(t.c);
      --k;
    }
    for (; current_j > 0; --current_j) inner *= nu;
    acc += inner;
  }
  for (; current_i > 0; --current_i) acc *= mu;
  return acc;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  std::vector<Term> ordered = terms_;
  std::stable_sort(ordered.begin(), ordered.end(), [](const Term& a, const Term& b) {
    if (a.i + a.j != b.i + b.j) return a.i + a.j > b.i + b.j;
    return a.i > b.i;
  });
  for (const auto& t : ordered) {
    Rational c = t.c;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool constant = t.i == 0 && t.j == 0;
    if (c != 1 || constant) {
      os << rational_to_string(c);
      if (!constant) os << "*";
    }
    append_monomial(os, "mu", t.i);
    if (t.i > 0 && t.j > 0) os << "*";
    append_monomial(os, "nu", t.j);
  }
  return os.str();
}

BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  int di = a.degree_mu() + b.degree_mu() + 1;
  int dj = a.degree_nu() + b.degree_nu() + 1;
  std::vector<Rational> dense(static_cast<std::size_t>(di) * dj);
  std::vector<bool> used(dense.size(), false);
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      std::size_t idx = static_cast<std::size_t>(ta.i + tb.i) * dj + (ta.j + tb.j);
      dense[idx] += ta.c * tb.c;
      used[idx] = true;
    }
  }
  std::vector<BivariatePolynomial::Term> out;
  for (int i = 0; i < di; ++i) {
    for (int j = 0; j < dj; ++j) {
      std::size_t idx = static_cast<std::size_t>(i) * dj + j;
      if (used[idx] && dense[idx] != 0) out.push_back({i, j, std::move(dense[idx])});
    }
  }
  return BivariatePolynomial::from_terms(std::move(out));
}

BivariatePolynomial operator*(BivariatePolynomial a, const Rational& c) { return a *= c; }
BivariatePolynomial operator*(const Rational& c, BivariatePolynomial a) { return a *= c; }

BivariatePolynomial poly_arith(const BivariatePolynomial& a, const BivariatePolynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add:
      return a + b;
    case PolyOp::Sub:
      return a - b;
    case PolyOp::Mul:
      return a * b;
  }
  throw std::invalid_argument("poly_arith: unknown op");
}

Rational poly_eval(const BivariatePolynomial& p, const Rational& mu, const Rational& nu) { return p.eval(mu, nu); }
BigFloat poly_eval(const BivariatePolynomial& p, const BigFloat& mu, const BigFloat& nu) { return p.eval(mu, nu); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

Polynomial Polynomial::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("shifted: negative shift");
  if (is_zero()) return {};
  std::vector<Rational> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigFloat Polynomial::eval(const BigFloat& x) const {
  BigFloat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigFloat(*it);
  return acc;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (c != 1 || k == 0) {
      os << rational_to_string(c);
      if (k > 0) os << "*";
    }
    append_monomial(os, var, k);
  }
  return os.str();
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coefficients().size() + b.coefficients().size() - 1);
  for (std::size_t p = 0; p < a.coefficients().size(); ++p) {
    for (std::size_t q = 0; q < b.coefficients().size(); ++q) {
      v[p + q] += a.coefficients()[p] * b.coefficients()[q];
    }
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

}  // namespace cplab
