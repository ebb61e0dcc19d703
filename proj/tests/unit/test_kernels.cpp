#include <gtest/gtest.h>

#include <cmath>

#include "cplab/kernels/kernels.hpp"
#include "support/generators.hpp"

namespace cplab {
namespace {

constexpr KernelKind kAllKinds[] = {KernelKind::Sine,     KernelKind::Airy,     KernelKind::Bessel,
                                    KernelKind::SineDiff, KernelKind::AiryDiff, KernelKind::BesselDiff};

BigFloat eval(KernelKind kind, double x, double y, int alpha = 0) {
  KernelPoint p;
  p.kind = kind;
  p.x = BigFloat(x);
  p.y = BigFloat(y);
  p.alpha = alpha;
  return kernel_eval(p);
}

double rel(const BigFloat& a, const BigFloat& b) { return relative_difference(a, b).to_double(); }

// Sample point inside each kernel's natural domain.
std::pair<double, double> sample(testing::Gen& g, KernelKind kind) {
  if (regime_of(kind) == Regime::Hard) return {g.uniform(0.05, 30), g.uniform(0.05, 30)};
  if (regime_of(kind) == Regime::Soft) return {g.uniform(-8, 6), g.uniform(-8, 6)};
  return {g.uniform(-5, 5), g.uniform(-5, 5)};
}

TEST(MpDensity, Examples) {
  EXPECT_LT(rel(mp_density(BigFloat(2)), BigFloat(1) / (BigFloat(2) * pi())), 1e-70);
  EXPECT_LT(rel(mp_density(BigFloat(1)), sqrt(BigFloat(3)) / (BigFloat(2) * pi())), 1e-70);
  EXPECT_NEAR(mp_density(BigFloat(1)).to_double(), 0.275664, 1e-6);
  for (double xi : {0.01, 0.5, 1.0, 2.0, 3.0, 3.99}) {
    BigFloat x(xi);
    BigFloat pg = pi() * mp_density(x);
    EXPECT_LT(rel(pg * pg, (BigFloat(1) - x / BigFloat(4)) / x), 1e-12);
  }
  EXPECT_THROW(mp_density(BigFloat(0)), std::domain_error);
  EXPECT_THROW(mp_density(BigFloat(4)), std::domain_error);
  EXPECT_THROW(mp_density(BigFloat(-1)), std::domain_error);
}

// Reference values computed independently with mpmath at 40 digits.
TEST(Kernels, ReferenceValues) {
  EXPECT_LT(rel(eval(KernelKind::Sine, 0.7, 0.1), BigFloat("0.5045511524271046528218876709400370752507")), 1e-15);
  EXPECT_LT(rel(eval(KernelKind::SineDiff, 0.7, 0.1), BigFloat("4.519823037789178205134339378460311856171")), 1e-15);
  EXPECT_LT(rel(eval(KernelKind::Airy, 1.0, 0.2), BigFloat("0.01773129244114031575402537390425857185821")), 1e-15);
  EXPECT_LT(rel(eval(KernelKind::AiryDiff, 1.0, 0.2), BigFloat("0.006921399459435207220823462219902069083468")),
            1e-15);
  EXPECT_LT(rel(eval(KernelKind::Airy, -3, -1.5), BigFloat("0.1754480178046377556405888085525772970178")), 1e-30);
  EXPECT_LT(rel(eval(KernelKind::AiryDiff, -3, -1.5), BigFloat("0.421229891854249045738771603729608873646")), 1e-30);
  EXPECT_LT(rel(eval(KernelKind::Bessel, 1, 2, 0), BigFloat("0.1715723369389569134562228193122430383248")), 1e-30);
  EXPECT_LT(rel(eval(KernelKind::BesselDiff, 1, 2, 0), BigFloat("0.02441436352092651492333001499498874452317")),
            1e-30);
  EXPECT_LT(rel(eval(KernelKind::Bessel, 2, 0.5, 1), BigFloat("0.02529930690898641367708367758751028887861")), 1e-30);
  EXPECT_LT(rel(eval(KernelKind::BesselDiff, 2, 0.5, 1), BigFloat("0.002225497840463363813287461051945844482393")),
            1e-30);
}

TEST(Kernels, SineExamplesAndBound) {
  EXPECT_EQ(eval(KernelKind::Sine, 0.3, 0.3).to_double(), 1.0);
  EXPECT_LT(rel(eval(KernelKind::Sine, 1.0, 0.5), BigFloat(2) / pi()), 1e-70);
  testing::Gen g(11);
  for (int k = 0; k < 200; ++k) {
    double x = g.uniform(-20, 20);
    double y = k % 4 == 0 ? x + g.uniform(-1e-4, 1e-4) : g.uniform(-20, 20);
    EXPECT_LE(abs(eval(KernelKind::Sine, x, y)).to_double(), 1.0);
  }
}

TEST(Kernels, Symmetric) {
  testing::Gen g(12);
  for (KernelKind kind : kAllKinds) {
    for (int k = 0; k < 15; ++k) {
      auto [x, y] = sample(g, kind);
      int alpha = static_cast<int>(g.integer(0, 3));
      if (k % 5 == 0) y = x + 3e-5;
      EXPECT_LT(rel(eval(kind, x, y, alpha), eval(kind, y, x, alpha)), 1e-60) << to_string(kind) << " " << x << " " << y;
    }
  }
}

TEST(Kernels, ContinuousAcrossNearDiagonalSwitch) {
  const BigFloat threshold("1e-4");
  testing::Gen g(13);
  for (KernelKind kind : kAllKinds) {
    for (int k = 0; k < 10; ++k) {
      auto [x, unused] = sample(g, kind);
      int alpha = static_cast<int>(g.integer(0, 3));
      BigFloat bx(x);
      BigFloat by = bx - threshold;
      if (regime_of(kind) == Regime::Hard && by.sign() <= 0) continue;
      BigFloat series = kernel_near_diagonal(kind, bx, by, alpha);
      BigFloat direct = kernel_direct(kind, bx, by, alpha);
      EXPECT_LT(abs(series - direct).to_double(), 1e-9) << to_string(kind) << " x=" << x;
    }
  }
}

TEST(Kernels, DiagonalFormulaMatchesOffDiagonalLimit) {
  testing::Gen g(14);
  for (KernelKind kind : kAllKinds) {
    for (int k = 0; k < 8; ++k) {
      auto [x, unused] = sample(g, kind);
      int alpha = static_cast<int>(g.integer(0, 3));
      BigFloat bx(x);
      BigFloat diag = kernel_diagonal(kind, bx, alpha);
      // the Taylor route generates its coefficients from the ODEs, not from the closed form
      EXPECT_LT(abs(kernel_near_diagonal(kind, bx, bx, alpha) - diag).to_double(), 1e-60) << to_string(kind);
      // limit of the off-diagonal formula
      BigFloat d("1e-6");
      BigFloat off = kernel_direct(kind, bx + d, bx - d, alpha);
      EXPECT_LT(abs(off - diag).to_double(), 1e-8 * std::max(1.0, abs(diag).to_double())) << to_string(kind);
    }
  }
}

TEST(Kernels, BesselDomain) {
  EXPECT_THROW(eval(KernelKind::Bessel, 0.0, 1.0), std::domain_error);
  EXPECT_THROW(eval(KernelKind::BesselDiff, 1.0, -1.0), std::domain_error);
  EXPECT_THROW(kernel_diagonal(KernelKind::Bessel, BigFloat(0)), std::domain_error);
  EXPECT_THROW(kernel_direct(KernelKind::Sine, BigFloat(1), BigFloat(1)), std::domain_error);
}

TEST(Kernels, Parsing) {
  for (KernelKind kind : kAllKinds) EXPECT_EQ(parse_kernel_kind(to_string(kind)), kind);
  EXPECT_EQ(parse_kernel_kind("AIRY2"), KernelKind::AiryDiff);
  EXPECT_EQ(parse_regime("Hard"), Regime::Hard);
  EXPECT_THROW(parse_kernel_kind("cosine"), std::invalid_argument);
  EXPECT_THROW(parse_regime("edge"), std::invalid_argument);
  for (Regime r : {Regime::Bulk, Regime::Soft, Regime::Hard}) {
    EXPECT_EQ(regime_of(base_kernel(r)), r);
    EXPECT_EQ(regime_of(differentiated_kernel(r)), r);
    EXPECT_TRUE(is_differentiated(differentiated_kernel(r)));
    EXPECT_FALSE(is_differentiated(base_kernel(r)));
  }
}

TEST(DOperator, Examples) {
  const BigFloat h("1e-4");
  BigFloat sine = apply_D_numeric(Regime::Bulk, BigFloat(0.7), BigFloat(0.1), h);
  EXPECT_LT(abs(sine - eval(KernelKind::SineDiff, 0.7, 0.1)).to_double(), 1e-6);
  BigFloat airy = apply_D_numeric(Regime::Soft, BigFloat(1.0), BigFloat(0.2), h);
  EXPECT_LT(abs(airy - eval(KernelKind::AiryDiff, 1.0, 0.2)).to_double(), 1e-6);
  BigFloat bessel = apply_D_numeric(Regime::Hard, BigFloat(2.0), BigFloat(0.5), h, 1);
  EXPECT_LT(abs(bessel - eval(KernelKind::BesselDiff, 2.0, 0.5, 1)).to_double(), 1e-6);
}

TEST(DOperator, MatchesDifferentiatedKernelsOnGrid) {
  const BigFloat h("1e-4");
  for (Regime r : {Regime::Bulk, Regime::Soft, Regime::Hard}) {
    int count = 0;
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        if (i == j) continue;
        double x = r == Regime::Hard ? 0.4 + 1.7 * i : -2.0 + 1.1 * i;
        double y = r == Regime::Hard ? 0.7 + 1.5 * j : -1.7 + 0.9 * j;
        int alpha = (i + j) % 3;
        BigFloat d = apply_D_numeric(r, BigFloat(x), BigFloat(y), h, alpha);
        BigFloat want = eval(differentiated_kernel(r), x, y, alpha);
        EXPECT_LT(abs(d - want).to_double(), 1e-6) << to_string(r) << " " << x << " " << y;
        ++count;
      }
    }
    EXPECT_GE(count, 20);
  }
}

TEST(DOperator, RejectsBadSteps) {
  EXPECT_THROW(apply_D_numeric(Regime::Bulk, BigFloat(0.7), BigFloat(0.1), BigFloat(0.2)), std::invalid_argument);
  EXPECT_THROW(apply_D_numeric(Regime::Bulk, BigFloat(0.7), BigFloat(0.1), BigFloat(0)), std::invalid_argument);
  EXPECT_THROW(apply_D_numeric(Regime::Bulk, BigFloat(3.0), BigFloat(0.1), BigFloat(0.5)), StepTooLarge);
  EXPECT_THROW(apply_D_numeric(Regime::Hard, BigFloat(3.0), BigFloat(0.1), BigFloat(0.1)), std::domain_error);
}

}  // namespace
}  // namespace cplab
