#include "cplab/recursion/chiral_system.hpp"

#include <stdexcept>
#include <string>

namespace cplab {
namespace {

const BivariatePolynomial kZero{};

int tag_index(ChiralTag t) {
  switch (t) {
    case ChiralTag::None:
      return 0;
    case ChiralTag::T01:
      return 1;
    case ChiralTag::T10:
      return 2;
    case ChiralTag::T11A:
      return 3;
    case ChiralTag::T11B:
      return 4;
    case ChiralTag::T11C:
      return 5;
  }
  return 0;
}

}  // namespace

ChiralAuxTable::ChiralAuxTable(EnsembleSpec ensemble, int n_max, int m_max)
    : ensemble_(std::move(ensemble)),
      n_max_(n_max),
      m_max_(m_max),
      cells_(static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(m_max + 1)) {}

int ChiralAuxTable::slot(ChiralTag left, ChiralTag right) {
  if (left != ChiralTag::None && right != ChiralTag::None) {
    throw std::invalid_argument("ChiralAuxTable: at most one side may carry a deletion tag");
  }
  if (left != ChiralTag::None) return tag_index(left);
  if (right != ChiralTag::None) return 5 + tag_index(right);
  return 0;
}

BivariatePolynomial& ChiralAuxTable::at(int s, int n, int m) {
  return cells_[static_cast<std::size_t>(n) * static_cast<std::size_t>(m_max_ + 1) + m][static_cast<std::size_t>(s)];
}

const BivariatePolynomial& ChiralAuxTable::get(int n, int m, ChiralTag left, ChiralTag right) const {
  if (n < 0 || m < 0) return kZero;
  if (n > n_max_ || m > m_max_) {
    throw std::out_of_range("ChiralAuxTable: (" + std::to_string(n) + "," + std::to_string(m) +
                            ") outside the computed range");
  }
  return cells_[static_cast<std::size_t>(n) * static_cast<std::size_t>(m_max_ + 1) + m]
               [static_cast<std::size_t>(slot(left, right))];
}

ChiralAuxTable ChiralAuxTable::build(const EnsembleSpec& ensemble, int n_max, int m_max) {
  if (n_max < 0 || m_max < 0) throw std::invalid_argument("ChiralAuxTable: negative size");
  ChiralAuxTable t(ensemble, n_max, m_max);
  using T = ChiralTag;
  constexpr T N = T::None;
  const bool real = ensemble.is_real();
  const Rational fourth = ensemble.entry_fourth_moment();
  const BivariatePolynomial mu = BivariatePolynomial::mu();
  const BivariatePolynomial nu = BivariatePolynomial::nu();

  auto f = [&t](int n, int m, T l = T::None, T r = T::None) -> const BivariatePolynomial& {
    return t.get(n, m, l, r);
  };

  for (int total = 0; total <= n_max + m_max; ++total) {
    for (int n = std::max(0, total - m_max); n <= std::min(n_max, total); ++n) {
      const int m = total - n;
      const Rational rn(n);
      const Rational rm(m);
      const Rational nn1(n * (n - 1));
      const Rational mm1(m * (m - 1));

      // Right-tagged entries come from the m-direction expansion.
      if (m >= 1) {
        BivariatePolynomial b01;
        b01.add_scaled(f(n, m - 1), 1, 1, 0);
        b01.add_scaled(f(n, m - 1, T::T10, N), -rn);
        t.at(slot(N, T::T01), n, m) = std::move(b01);

        BivariatePolynomial b10;
        b10.add_scaled(f(n, m - 1), 1, 0, 1);
        b10.add_scaled(f(n, m - 1, T::T01, N), -rn);
        t.at(slot(N, T::T10), n, m) = std::move(b10);
      }
      if (m >= 2) {
        BivariatePolynomial d;
        d.add_scaled(f(n, m - 2), 1, 1, 1);
        d.add_scaled(f(n, m - 2, T::T01, N), -rn, 1, 0);
        d.add_scaled(f(n, m - 2, T::T10, N), -rn, 0, 1);
        d.add_scaled(f(n - 1, m - 2), rn);
        d.add_scaled(f(n, m - 2, T::T11A, N), nn1);
        t.at(slot(N, T::T11A), n, m) = std::move(d);

        BivariatePolynomial e;
        e.add_scaled(f(n - 1, m - 2), rn);
        e.add_scaled(f(n, m - 2, T::T11C, N), nn1);
        t.at(slot(N, T::T11C), n, m) = std::move(e);

        if (real) {
          BivariatePolynomial eb;
          eb.add_scaled(f(n - 1, m - 2), rn);
          eb.add_scaled(f(n, m - 2, T::T11B, N), nn1);
          t.at(slot(N, T::T11B), n, m) = std::move(eb);
        }
      }

      // Left-tagged entries come from the n-direction expansion.
      if (n >= 1) {
        BivariatePolynomial g;
        g.add_scaled(f(n - 1, m), 1, 1, 0);
        g.add_scaled(f(n - 1, m, N, T::T10), -rm);
        t.at(slot(T::T01, N), n, m) = std::move(g);

        BivariatePolynomial h;
        h.add_scaled(f(n - 1, m), 1, 0, 1);
        h.add_scaled(f(n - 1, m, N, T::T01), -rm);
        t.at(slot(T::T10, N), n, m) = std::move(h);
      }
      if (n >= 2) {
        BivariatePolynomial i;
        i.add_scaled(f(n - 2, m), 1, 1, 1);
        i.add_scaled(f(n - 2, m, N, T::T01), -rm, 1, 0);
        i.add_scaled(f(n - 2, m, N, T::T10), -rm, 0, 1);
        i.add_scaled(f(n - 2, m - 1), rm);
        i.add_scaled(f(n - 2, m, N, T::T11A), mm1);
        t.at(slot(T::T11A, N), n, m) = std::move(i);

        BivariatePolynomial j;
        j.add_scaled(f(n - 2, m - 1), rm);
        j.add_scaled(f(n - 2, m, N, T::T11C), mm1);
        t.at(slot(T::T11C, N), n, m) = std::move(j);

        if (real) {
          BivariatePolynomial jb;
          jb.add_scaled(f(n - 2, m - 1), rm);
          jb.add_scaled(f(n - 2, m, N, T::T11B), mm1);
          t.at(slot(T::T11B, N), n, m) = std::move(jb);
        }
      }

      // Plain entry.
      if (n == 0 || m == 0) {
        t.at(0, n, m) = BivariatePolynomial::monomial(1, total, total);
        continue;
      }
      BivariatePolynomial a;
      a.add_scaled(f(n, m - 1), 1, 1, 1);
      a.add_scaled(f(n, m - 1, T::T01, N), -rn, 1, 0);
      a.add_scaled(f(n, m - 1, T::T10, N), -rn, 0, 1);
      a.add_scaled(f(n - 1, m - 1), fourth * rn);
      a.add_scaled(f(n, m - 1, T::T11A, N), nn1);
      a.add_scaled(f(n, m - 1, T::T11C, N), nn1);
      if (real) a.add_scaled(f(n, m - 1, T::T11B, N), nn1);

      BivariatePolynomial b;
      b.add_scaled(f(n - 1, m), 1, 1, 1);
      b.add_scaled(f(n - 1, m, N, T::T01), -rm, 1, 0);
      b.add_scaled(f(n - 1, m, N, T::T10), -rm, 0, 1);
      b.add_scaled(f(n - 1, m - 1), fourth * rm);
      b.add_scaled(f(n - 1, m, N, T::T11A), mm1);
      b.add_scaled(f(n - 1, m, N, T::T11C), mm1);
      if (real) b.add_scaled(f(n - 1, m, N, T::T11B), mm1);

      if (!(a == b)) {
        throw std::logic_error("ChiralAuxTable: the two expansions disagree at (" + std::to_string(n) + "," +
                               std::to_string(m) + ")");
      }
      t.at(0, n, m) = std::move(a);
    }
  }
  return t;
}

BivariatePolynomial ChiralAuxTable::covariance_moment(int n, int m) const {
  return chiral_to_covariance(get(n, m), n, m);
}

BivariatePolynomial chiral_to_covariance(const BivariatePolynomial& chiral, int n, int m) {
  const int shift = n - m;
  std::vector<BivariatePolynomial::Term> out;
  out.reserve(chiral.size());
  for (const auto& term : chiral.terms()) {
    int i = term.i - shift;
    int j = term.j - shift;
    if (i < 0 || j < 0 || i % 2 != 0 || j % 2 != 0) {
      throw std::logic_error("chiral_to_covariance: term mu^" + std::to_string(term.i) + " nu^" +
                             std::to_string(term.j) + " incompatible with (n,m)=(" + std::to_string(n) + "," +
                             std::to_string(m) + ")");
    }
    out.push_back({i / 2, j / 2, term.c});
  }
  return BivariatePolynomial::from_terms(std::move(out));
}

}  // namespace cplab
