#include <gtest/gtest.h>

#include "cplab/polycore/bigfloat.hpp"
#include "cplab/polycore/complex.hpp"
#include "cplab/polycore/polynomial.hpp"
#include "cplab/polycore/rational.hpp"
#include "support/generators.hpp"

namespace cplab {
namespace {

using P = BivariatePolynomial;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational("-1.5e-2"), Rational(-3, 200));
  EXPECT_EQ(parse_rational(" 3/-6 "), Rational(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, CanonicalFormIsUnique) {
  testing::Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    Rational q = gen.rational();
    long k = gen.integer(1, 30);
    Rational scaled(q.get_num() * k, q.get_den() * k);
    scaled.canonicalize();
    EXPECT_EQ(rational_to_string(scaled), rational_to_string(q));
    EXPECT_GT(scaled.get_den(), 0);
  }
}

TEST(Rational, FieldAxiomsOnRandomInputs) {
  testing::Gen gen(12);
  for (int trial = 0; trial < 300; ++trial) {
    Rational a = gen.rational(1000, 97);
    Rational b = gen.rational(1000, 97);
    Rational c = gen.rational(1000, 97);
    EXPECT_EQ(Rational((a + b) + c), Rational(a + (b + c)));
    EXPECT_EQ(Rational(a * b), Rational(b * a));
    EXPECT_EQ(Rational((a * b) * c), Rational(a * (b * c)));
    EXPECT_EQ(Rational(a * (b + c)), Rational(a * b + a * c));
  }
}

TEST(Rational, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(5, -1), 0);
}

TEST(BivariatePolynomial, TermMerge) {
  P a = P::mu() * P::nu();
  P b = -P::mu() - P::nu();
  P sum = poly_arith(a, b, PolyOp::Add);
  EXPECT_EQ(sum.to_string(), "mu*nu - mu - nu");
  EXPECT_EQ(sum.size(), 3u);
}

TEST(BivariatePolynomial, DifferenceOfSquares) {
  P product = poly_arith(P::mu() + P::nu(), P::mu() - P::nu(), PolyOp::Mul);
  EXPECT_EQ(product, P::monomial(1, 2, 0) - P::monomial(1, 0, 2));
}

TEST(BivariatePolynomial, ZeroAnnihilates) {
  testing::Gen gen(3);
  P p = gen.polynomial();
  P zero = poly_arith(p, P(), PolyOp::Mul);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_TRUE(poly_arith(p, p, PolyOp::Sub).is_zero());
}

TEST(BivariatePolynomial, EvaluationExamples) {
  P p = P::mu() * P::nu() - P::mu() - P::nu() + P(Rational(5, 2));
  EXPECT_EQ(poly_eval(p, Rational(2), Rational(3)), Rational(7, 2));
  EXPECT_EQ(poly_eval(P(), Rational(5), Rational(-1)), Rational(0));
  P power = P::monomial(1, 7, 7);
  EXPECT_EQ(poly_eval(power, Rational(1), Rational(1)), Rational(1));
  EXPECT_EQ(poly_eval(p, BigFloat(2), BigFloat(3)).to_double(), 3.5);
}

TEST(BivariatePolynomial, FromTermsPrunesAndSorts) {
  P p = P::from_terms({{2, 1, 3}, {0, 0, 1}, {2, 1, -3}, {1, 4, 2}, {0, 0, 1}});
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.coefficient(0, 0), 2);
  EXPECT_EQ(p.coefficient(1, 4), 2);
  EXPECT_EQ(p.coefficient(2, 1), 0);
  EXPECT_EQ(p.degree_mu(), 1);
  EXPECT_EQ(p.degree_nu(), 4);
  EXPECT_EQ(p.total_degree(), 5);
}

TEST(BivariatePolynomial, EvaluationIsMultiplicative) {
  testing::Gen gen(21);
  for (int trial = 0; trial < 100; ++trial) {
    P p = gen.polynomial();
    P q = gen.polynomial();
    Rational mu = gen.rational();
    Rational nu = gen.rational();
    EXPECT_EQ(poly_eval(p * q, mu, nu), Rational(poly_eval(p, mu, nu) * poly_eval(q, mu, nu)));
    EXPECT_EQ(poly_eval(p + q, mu, nu), Rational(poly_eval(p, mu, nu) + poly_eval(q, mu, nu)));
  }
}

TEST(BivariatePolynomial, RingAxiomsOnRandomPolynomials) {
  testing::Gen gen(22);
  for (int trial = 0; trial < 60; ++trial) {
    P a = gen.polynomial();
    P b = gen.polynomial();
    P c = gen.polynomial();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(BivariatePolynomial, AddScaledMatchesExplicitShift) {
  testing::Gen gen(23);
  for (int trial = 0; trial < 60; ++trial) {
    P a = gen.polynomial();
    P b = gen.polynomial();
    Rational c = gen.rational();
    int di = static_cast<int>(gen.integer(0, 3));
    int dj = static_cast<int>(gen.integer(0, 3));
    P expected = a + c * b * P::monomial(1, di, dj);
    a.add_scaled(b, c, di, dj);
    EXPECT_EQ(a, expected);
  }
}

TEST(BivariatePolynomial, SwapAndBigFloatEvaluationAgree) {
  testing::Gen gen(24);
  for (int trial = 0; trial < 40; ++trial) {
    P p = gen.polynomial(6, 10);
    Rational mu = gen.rational();
    Rational nu = gen.rational();
    EXPECT_EQ(poly_eval(p.swapped(), nu, mu), poly_eval(p, mu, nu));
    BigFloat exact(poly_eval(p, mu, nu));
    BigFloat approx = poly_eval(p, BigFloat(mu), BigFloat(nu));
    EXPECT_LT(abs(exact - approx).to_double(), 1e-60 * (1 + abs(exact).to_double()));
  }
}

TEST(Polynomial, ArithmeticAndPrinting) {
  Polynomial x = Polynomial::monomial(1, 1);
  Polynomial p = x * x * x - x * Rational(2);
  EXPECT_EQ(p.to_string("lambda"), "lambda^3 - 2*lambda");
  EXPECT_EQ(p.eval(Rational(3)), 21);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.shifted(2).degree(), 5);
}

TEST(BigFloat, RationalRoundTripWithinOneUlp) {
  testing::Gen gen(31);
  for (mpfr_prec_t bits : {64, 256, 1024}) {
    PrecisionGuard guard(bits);
    for (int trial = 0; trial < 100; ++trial) {
      Rational q = gen.rational(1000000, 99991);
      if (q == 0) continue;
      BigFloat x(q);
      Rational back = x.to_rational();
      Rational err = back - q;
      if (err < 0) err = -err;
      BigFloat ulp = ldexp(BigFloat(1), x.exponent() - bits);
      EXPECT_LE(BigFloat(err), ulp) << "bits=" << bits;
    }
  }
}

TEST(BigFloat, WideExponentRange) {
  BigFloat big = exp(BigFloat(4000));
  EXPECT_TRUE(big.is_finite());
  EXPECT_NEAR((log(big) - BigFloat(4000)).to_double(), 0.0, 1e-60);
  BigFloat tiny = exp(BigFloat(-100000));
  EXPECT_GT(tiny.sign(), 0);
}

TEST(BigFloat, PrecisionGuardScopes) {
  EXPECT_EQ(working_precision(), kDefaultPrecisionBits);
  {
    PrecisionGuard guard(512);
    EXPECT_EQ(BigFloat(1).precision(), 512);
  }
  EXPECT_EQ(BigFloat(1).precision(), kDefaultPrecisionBits);
  EXPECT_THROW(PrecisionGuard(0), std::invalid_argument);
}

TEST(BigFloat, ParsesText) {
  EXPECT_EQ(BigFloat("1/4").to_double(), 0.25);
  EXPECT_EQ(BigFloat("-2.5").to_double(), -2.5);
  EXPECT_THROW(BigFloat("x1"), std::invalid_argument);
}

TEST(Complex, PrincipalBranches) {
  Complex z(BigFloat(-4), BigFloat(0));
  Complex s = sqrt(z);
  EXPECT_NEAR(s.re.to_double(), 0.0, 1e-70);
  EXPECT_NEAR(s.im.to_double(), 2.0, 1e-70);
  Complex w(BigFloat(-3), BigFloat(-4));
  Complex r = sqrt(w);
  EXPECT_GE(r.re.sign(), 0);
  Complex sq = r * r;
  EXPECT_NEAR((sq.re - w.re).to_double(), 0.0, 1e-60);
  EXPECT_NEAR((sq.im - w.im).to_double(), 0.0, 1e-60);
  Complex l = log(w);
  Complex e = exp(l);
  EXPECT_NEAR((e.re - w.re).to_double(), 0.0, 1e-60);
  EXPECT_NEAR((e.im - w.im).to_double(), 0.0, 1e-60);
}

TEST(Complex, DivisionAndPowers) {
  testing::Gen gen(41);
  for (int trial = 0; trial < 50; ++trial) {
    Complex a(BigFloat(gen.uniform(-5, 5)), BigFloat(gen.uniform(-5, 5)));
    Complex b(BigFloat(gen.uniform(-5, 5)), BigFloat(gen.uniform(-5, 5)));
    Complex q = a / b * b;
    EXPECT_NEAR((q.re - a.re).to_double(), 0.0, 1e-60);
    EXPECT_NEAR((q.im - a.im).to_double(), 0.0, 1e-60);
    Complex p = pow(a, 5);
    Complex direct = a * a * a * a * a;
    EXPECT_LT(abs(p - direct).to_double(), 1e-60 * (1 + abs(direct).to_double()));
    Complex inv = pow(a, -2) * a * a;
    EXPECT_NEAR((inv.re - BigFloat(1)).to_double(), 0.0, 1e-60);
  }
}

}  // namespace
}  // namespace cplab
