#include <gtest/gtest.h>

#include <cmath>

#include "cplab/polycore/bigfloat.hpp"
#include "cplab/polycore/complex.hpp"
#include "cplab/specfun/airy.hpp"
#include "cplab/specfun/bessel.hpp"

namespace cplab {
namespace {

Complex c(double re, double im) { return {BigFloat(re), BigFloat(im)}; }

double rel_err(const Complex& a, const Complex& b) { return (abs(a - b) / abs(b)).to_double(); }
double rel_err(const BigFloat& a, const BigFloat& b) { return (abs(a - b) / abs(b)).to_double(); }

// Reference values computed independently with mpmath at 40 digits.
TEST(BesselI, ReferenceValues) {
  EXPECT_LT(rel_err(bessel_i(1, c(30, 0)), Complex(BigFloat("768532038938.9569994942947107881801819071"))), 1e-35);
  EXPECT_LT(rel_err(bessel_i(0, c(2, 3)), Complex(BigFloat("-1.249234879607422196376196813914385894367"),
                                                  BigFloat("0.9479837920577347761140606239814421995251"))),
            1e-35);
  EXPECT_LT(rel_err(bessel_i(2, c(40, -35)), Complex(BigFloat("-12471327972636465.22073441895827431905359"),
                                                     BigFloat("1334839874811636.979196582877822176718217"))),
            1e-35);
  SeriesPolicy low;
  low.precision = 64;
  Complex near_axis(BigFloat("0.06000716502964462876439921088171650951974"),
                    BigFloat("0.03229839598559948390832490821143664706316"));
  EXPECT_LT(rel_err(bessel_i_asymptotic(1, c(0.5, 45), low), near_axis), 1e-15);
  EXPECT_LT(rel_err(bessel_i_asymptotic(1, c(0.5, -45), low), conj(near_axis)), 1e-15);
}

TEST(BesselI, SeriesHead) {
  EXPECT_EQ(bessel_i(0, c(0, 0)).re.to_double(), 1.0);
  for (int a = 1; a <= 3; ++a) {
    Complex v = bessel_i(a, c(0, 0));
    EXPECT_TRUE(v.re.is_zero() && v.im.is_zero());
  }
}

TEST(BesselI, LeadingAsymptoticTerm) {
  BigFloat i1 = bessel_i_series(1, c(30, 0)).re;
  BigFloat ratio = i1 * sqrt(BigFloat(2) * pi() * BigFloat(30)) / exp(BigFloat(30));
  EXPECT_LT(std::fabs(ratio.to_double() - 1.0), 0.02);
}

TEST(BesselI, SeriesAndAsymptoticAgreeInCrossoverAnnulus) {
  SeriesPolicy low;
  low.precision = 64;
  for (int a = 0; a <= 3; ++a) {
    for (double r : {30.0, 34.0, 40.0, 45.0}) {
      for (double phase : {-1.5707963267948966, -1.2, -0.4, 0.0, 0.7, 1.3, 1.5707963267948966}) {
        Complex z = c(r * std::cos(phase), r * std::sin(phase));
        if (z.re.sign() < 0) z.re = BigFloat(0);
        Complex s = bessel_i_series(a, z, low);
        Complex as = bessel_i_asymptotic(a, z, low);
        EXPECT_LT(rel_err(as, s), 1e-10) << "alpha=" << a << " r=" << r << " phase=" << phase;
      }
    }
  }
}

TEST(BesselI, ExponentialBoundOnRightHalfPlane) {
  double worst = 0;
  for (int a = 0; a <= 3; ++a) {
    for (double r : {1.0, 2.0, 5.0, 10.0, 25.0, 60.0, 150.0}) {
      for (int k = -8; k <= 8; ++k) {
        double phase = 1.5707963267948966 * k / 8.0;
        Complex z = c(r * std::cos(phase), r * std::sin(phase));
        double ratio = (abs(bessel_i(a, z)) * sqrt(BigFloat(r)) / exp(z.re)).to_double();
        worst = std::max(worst, ratio);
      }
    }
  }
  EXPECT_GT(worst, 0.0);
  EXPECT_LT(worst, 1.0);
}

TEST(BesselI, PositiveAndIncreasingOnPositiveAxis) {
  for (int a = 0; a <= 3; ++a) {
    BigFloat previous(-1);
    for (double x = 0.25; x < 200; x *= 1.6) {
      BigFloat v = bessel_i(a, c(x, 0)).re;
      EXPECT_GT(v.sign(), 0);
      EXPECT_GT(v, previous);
      previous = v;
    }
  }
}

TEST(BesselPhi, MatchesSeriesAndBesselRoutes) {
  SeriesPolicy low;
  low.precision = 64;
  for (int a = 0; a <= 2; ++a) {
    for (double phase : {0.0, 0.9, 2.0, 3.0, -2.5}) {
      for (double modulus : {0.3, 40.0, 400.0, 900.0}) {
        Complex q = c(modulus * std::cos(phase), modulus * std::sin(phase));
        Complex direct = bessel_phi_series(a, q, low);
        Complex routed = bessel_phi(a, q, low);
        EXPECT_LT(rel_err(routed, direct), 1e-12) << "alpha=" << a << " |q|=" << modulus << " phase=" << phase;
        // Phi_a(q) = (w/2)^{-a} I_a(w) with w = 2 sqrt(q)
        Complex w = sqrt(q) * BigFloat(2);
        Complex via_i = bessel_i(a, w, low) / pow(w / BigFloat(2), a);
        EXPECT_LT(rel_err(via_i, direct), 1e-12);
      }
    }
  }
}

TEST(BesselJ, SeriesHeadAndReferences) {
  BesselJValue j0 = bessel_j(0, BigFloat(0));
  EXPECT_EQ(j0.value.to_double(), 1.0);
  EXPECT_TRUE(j0.derivative.is_zero());
  EXPECT_TRUE(bessel_j(1, BigFloat(0)).value.is_zero());
  EXPECT_LT(rel_err(bessel_j(0, BigFloat(5)).value, BigFloat("-0.1775967713143383043473970130747587110711")), 1e-35);
  EXPECT_LT(rel_err(bessel_j(0, BigFloat(5)).derivative, BigFloat("0.3275791375914652220377343219101691327608")),
            1e-35);
  BesselJValue j2 = bessel_j(2, BigFloat(40));
  EXPECT_LT(rel_err(j2.value, BigFloat("-0.001064974682358039593251599599479477543797")), 1e-32);
  EXPECT_LT(rel_err(j2.derivative, BigFloat("0.1260915667717029011852653018191458505671")), 1e-32);
}

TEST(BesselJ, SeriesAndHankelAgree) {
  SeriesPolicy low;
  low.precision = 64;
  for (int a = 0; a <= 3; ++a) {
    for (double x : {32.0, 40.0, 55.0, 80.0}) {
      BigFloat s = bessel_j_series(a, BigFloat(x), low);
      BigFloat h = bessel_j_asymptotic(a, BigFloat(x), low);
      EXPECT_LT(abs(s - h).to_double(), 1e-10 * abs(s).to_double() + 1e-14) << a << " " << x;
    }
  }
}

TEST(BesselJ, OdeResidual) {
  const BigFloat h("1e-8");
  for (int a = 0; a <= 2; ++a) {
    for (double xd : {1.0, 5.0, 10.0}) {
      BigFloat x(xd);
      BesselJValue mid = bessel_j(a, x);
      BigFloat second = (bessel_j(a, x + h).value - BigFloat(2) * mid.value + bessel_j(a, x - h).value) / (h * h);
      BigFloat residual = x * x * second + x * mid.derivative + (x * x - BigFloat(a * a)) * mid.value;
      EXPECT_LT(abs(residual).to_double(), 1e-12) << a << " " << xd;
    }
  }
}

TEST(Airy, ReferenceValues) {
  struct Ref {
    double x;
    const char* ai;
    const char* aip;
  };
  const Ref refs[] = {
      {2, "0.03492413042327437913532208079180760976106", "-0.05309038443365363170399918587870349124856"},
      {-5, "0.3507610090241143197880163276967422214844", "0.3271928185544431367948786774266291979275"},
      {-20, "-0.1764061270779846895901922922194775049259", "0.8928628567364712383984099341143186250162"},
      {15, "2.164962520737992298989454038808459772579e-18", "-8.420567954017772766124392806839117289902e-18"},
  };
  for (const auto& r : refs) {
    AiryValue v = airy(BigFloat(r.x));
    EXPECT_LT(rel_err(v.ai, BigFloat(r.ai)), 1e-35) << r.x;
    EXPECT_LT(rel_err(v.ai_prime, BigFloat(r.aip)), 1e-35) << r.x;
  }
}

TEST(Airy, OdeResidualAndSigns) {
  const BigFloat h("1e-8");
  for (double xd : {-2.0, 0.0, 2.0}) {
    BigFloat x(xd);
    BigFloat second = (airy(x + h).ai - BigFloat(2) * airy(x).ai + airy(x - h).ai) / (h * h);
    EXPECT_LT(abs(second - x * airy(x).ai).to_double(), 1e-12) << xd;
  }
  AiryValue zero = airy(BigFloat(0));
  EXPECT_GT(zero.ai.sign(), 0);
  EXPECT_LT(zero.ai_prime.sign(), 0);
  BigFloat previous = airy(BigFloat(2)).ai;
  for (double x = 2.5; x <= 10.0; x += 0.5) {
    BigFloat v = airy(BigFloat(x)).ai;
    EXPECT_GT(v.sign(), 0);
    EXPECT_LT(v, previous);
    previous = v;
  }
}

TEST(Airy, SeriesAndAsymptoticAgree) {
  SeriesPolicy low;
  low.precision = 64;
  for (double x : {-25.0, -15.0, -12.0, 12.0, 15.0, 25.0}) {
    AiryValue s = airy_series(BigFloat(x), low);
    AiryValue a = airy_asymptotic(BigFloat(x), low);
    EXPECT_LT(abs(s.ai - a.ai).to_double(), 1e-10 * abs(s.ai).to_double() + 1e-14 * (x < 0)) << x;
    EXPECT_LT(abs(s.ai_prime - a.ai_prime).to_double(), 1e-10 * abs(s.ai_prime).to_double() + 1e-14 * (x < 0)) << x;
  }
  EXPECT_THROW(airy_asymptotic(BigFloat(1)), SeriesNotConverged);
}

}  // namespace
}  // namespace cplab
