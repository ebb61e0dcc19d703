#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cplab/contour/contour.hpp"
#include "cplab/contour/identities.hpp"
#include "cplab/contour/limit_scan.hpp"
#include "cplab/recursion/second_moment.hpp"
#include "support/generators.hpp"

namespace cplab {
namespace {

double rel(const BigFloat& a, const BigFloat& b) { return relative_difference(a, b).to_double(); }
double rel(const Complex& a, const Complex& b) { return (abs(a - b) / abs(b)).to_double(); }

BigFloat exact_scaled(const EnsembleSpec& ens, int n, int m, const Rational& mu, const Rational& nu) {
  Rational v = second_moment_exact(ens, n, m).eval(mu, nu) / (factorial(n) * factorial(m));
  return BigFloat(v);
}

ContourSpec small_spec(int n, int m, const char* radius = "0.5") {
  ContourSpec s;
  s.n = n;
  s.m = m;
  s.radius = BigFloat(radius);
  s.threads = 1;
  return s;
}

TEST(Quadrature, PeriodicTrapezoidOnKnownIntegral) {
  // (1/2pi) int exp(cos t) dt = I_0(1)
  QuadratureOptions o;
  o.initial_nodes = 8;
  o.threads = 1;
  auto r = periodic_trapezoid([](const BigFloat& t) { return Complex(exp(cos(t))); }, o);
  EXPECT_LT(rel(r.value.re, BigFloat("1.266065877752008335598244625214717537607")), 1e-35);
  o.conjugate_symmetric = true;
  auto h = periodic_trapezoid([](const BigFloat& t) { return Complex(exp(cos(t))); }, o);
  EXPECT_LT(rel(h.value.re, r.value.re), 1e-60);
}

TEST(Quadrature, LineTrapezoidOnGaussian) {
  QuadratureOptions o;
  o.threads = 1;
  auto r = line_trapezoid([](const BigFloat& u) { return Complex(exp(-u * u)); }, o);
  EXPECT_LT(rel(r.value.re, sqrt(pi())), 1e-14);
  EXPECT_GE(r.half_width.to_double(), 4.0);
}

TEST(Quadrature, RejectsBadOptions) {
  QuadratureOptions o;
  o.initial_nodes = 100;
  EXPECT_THROW(periodic_trapezoid([](const BigFloat&) { return Complex(1); }, o), std::invalid_argument);
  o.initial_nodes = 8;
  o.max_nodes = 16;
  o.tolerance = 1e-30;
  // an off-grid kink converges only algebraically
  EXPECT_THROW(periodic_trapezoid([](const BigFloat& t) { return Complex(abs(sin(t - BigFloat("0.1")))); }, o),
               QuadratureNotConverged);
}

TEST(Integrand, SeriesAndBesselRoutesAgree) {
  auto ens = EnsembleSpec::complex(Rational(3, 4));
  ContourSpec spec = small_spec(2, 1, "0.9");
  BigFloat t("0.3");
  Complex a = contour_integrand(spec, t, BigFloat(2), BigFloat(3), ens, IntegrandRoute::Series);
  Complex b = contour_integrand(spec, t, BigFloat(2), BigFloat(3), ens, IntegrandRoute::Bessel);
  EXPECT_LT(rel(a, b), 1e-12);
  // large |w|, including arguments with Re w < 0 and mu nu < 0
  testing::Gen g(21);
  for (int k = 0; k < 20; ++k) {
    ContourSpec s = small_spec(static_cast<int>(g.integer(3, 6)), 2, "0.97");
    BigFloat tt(g.uniform(-3.1, 3.1));
    BigFloat mu(g.uniform(5, 60));
    BigFloat nu(k % 4 == 0 ? -g.uniform(5, 60) : g.uniform(5, 60));
    auto e = k % 2 ? EnsembleSpec::real(Rational(3)) : ens;
    Complex x = contour_integrand(s, tt, mu, nu, e, IntegrandRoute::Series);
    Complex y = contour_integrand(s, tt, mu, nu, e, IntegrandRoute::Bessel);
    Complex z = contour_integrand(s, tt, mu, nu, e, IntegrandRoute::Auto);
    EXPECT_LT(rel(y, x), 1e-30) << k;
    EXPECT_LT(rel(z, x), 1e-30) << k;
  }
}

TEST(Integrand, RealPositiveOnAxisAndConjugateSymmetric) {
  testing::Gen g(22);
  for (int k = 0; k < 10; ++k) {
    auto ens = k % 2 ? EnsembleSpec::real(Rational(5)) : EnsembleSpec::complex(Rational(2));
    ContourSpec s = small_spec(static_cast<int>(g.integer(2, 9)), 2, "0.8");
    BigFloat mu(g.uniform(0.1, 10)), nu(g.uniform(0.1, 10));
    Complex axis = contour_integrand(s, BigFloat(0), mu, nu, ens);
    EXPECT_GT(axis.re.sign(), 0);
    EXPECT_TRUE(axis.im.is_zero());
    BigFloat t(g.uniform(0.01, 3.1));
    Complex up = contour_integrand(s, t, mu, nu, ens);
    Complex down = contour_integrand(s, -t, mu, nu, ens);
    EXPECT_LT(rel(down, conj(up)), 1e-60);
  }
}

TEST(ContourIntegral, MatchesExactRecursionExamples) {
  auto c = EnsembleSpec::complex(Rational(3, 4));
  auto r33 = contour_integral(small_spec(3, 3), BigFloat(1), BigFloat(2), c);
  EXPECT_LT(rel(r33.value, exact_scaled(c, 3, 3, 1, 2)), 1e-10);
  auto re = EnsembleSpec::real(Rational(3));
  auto r54 = contour_integral(small_spec(5, 4), BigFloat(1), BigFloat(2), re);
  EXPECT_LT(rel(r54.value, exact_scaled(re, 5, 4, 1, 2)), 1e-10);
  EXPECT_EQ(r54.precision_bits, working_precision());
}

TEST(ContourIntegral, OracleEqualityOnSmallSizes) {
  testing::Gen g(23);
  const Rational bs[] = {Rational(1, 4), Rational(3, 4), Rational(2), Rational(1), Rational(3), Rational(9, 2)};
  for (int k = 0; k < 16; ++k) {
    int n = static_cast<int>(g.integer(0, 8));
    int m = static_cast<int>(g.integer(0, n));
    EnsembleSpec ens(k % 2 ? Variant::Real : Variant::Complex, bs[(k % 2) * 3 + k % 3]);
    Rational mu = g.rational(30, 7);
    Rational nu = g.rational(30, 7);
    if (mu == 0 && nu == 0) mu = 1;
    auto r = contour_integral(small_spec(n, m), BigFloat(mu), BigFloat(nu), ens);
    BigFloat want = exact_scaled(ens, n, m, mu, nu);
    if (want.is_zero()) {
      EXPECT_LT(abs(r.value).to_double(), 1e-30);
    } else {
      EXPECT_LT(rel(r.value, want), 1e-10) << ens.to_string() << " n=" << n << " m=" << m << " mu=" << mu;
    }
  }
}

TEST(ContourIntegral, RadiusIndependence) {
  auto ens = EnsembleSpec::real(Rational(4));
  const int N = 8;
  for (int alpha : {0, 2}) {
    std::vector<BigFloat> values;
    for (const BigFloat& R : {BigFloat(1) - BigFloat(1) / BigFloat(N), BigFloat(1) - BigFloat(2) / BigFloat(N),
                              BigFloat("0.5")}) {
      ContourSpec s = ContourSpec::for_size(N, alpha, R);
      s.threads = 1;
      values.push_back(contour_integral(s, BigFloat(3), BigFloat("-1.5"), ens).value);
    }
    EXPECT_LT(rel(values[0], values[2]), 1e-10);
    EXPECT_LT(rel(values[1], values[2]), 1e-10);
  }
}

TEST(ContourIntegral, FullContourImaginaryResidualAndDoubling) {
  auto ens = EnsembleSpec::complex(Rational(2));
  ContourSpec s = ContourSpec::for_size(12, 1, BigFloat(1) - BigFloat(1) / BigFloat(12));
  s.use_symmetry = false;
  s.threads = 1;
  auto full = contour_integral(s, BigFloat(10), BigFloat(14), ens);
  EXPECT_LT(full.imag_residual.to_double(), 1e-12);
  s.use_symmetry = true;
  auto half = contour_integral(s, BigFloat(10), BigFloat(14), ens);
  EXPECT_LT(rel(full.value, half.value), 1e-12);
  s.node_count = 2 * half.nodes_used;
  auto doubled = contour_integral(s, BigFloat(10), BigFloat(14), ens);
  EXPECT_LT(rel(doubled.value, half.value), 1e-12);
}

TEST(ContourIntegral, BulkScaledMatchesNumericRecursion) {
  auto ens = EnsembleSpec::complex(Rational(3, 4));
  RegimeConfig cfg;
  cfg.regime = Regime::Bulk;
  cfg.mu = BigFloat("0.3");
  cfg.nu = BigFloat("-0.2");
  cfg.alpha = 1;
  cfg.ensemble = ens;
  ScaledArguments args = scaled_arguments(cfg, 20);
  ContourSpec s = ContourSpec::for_size(20, 1, args.radius);
  s.threads = 1;
  auto r = contour_integral(s, args.mu, args.nu, ens);
  auto numeric = second_moment_numeric(ens, 20, 19, args.mu, args.nu, 256);
  EXPECT_LT(rel(r.value, numeric.value), 1e-8);
}

TEST(ContourIntegral, ValidatesSpec) {
  auto ens = EnsembleSpec::complex(Rational(1));
  ContourSpec s = small_spec(3, 3, "1");
  EXPECT_THROW(contour_integral(s, BigFloat(1), BigFloat(1), ens), std::invalid_argument);
  s = small_spec(3, 3);
  s.node_count = 100;
  EXPECT_THROW(contour_integral(s, BigFloat(1), BigFloat(1), ens), std::invalid_argument);
  s = small_spec(2, 3);
  EXPECT_THROW(contour_integral(s, BigFloat(1), BigFloat(1), ens), std::invalid_argument);
}

TEST(LimitScan, ScaledArgumentsFollowRegimeMaps) {
  RegimeConfig cfg;
  cfg.mu = BigFloat("0.5");
  cfg.nu = BigFloat("-0.5");
  cfg.regime = Regime::Soft;
  ScaledArguments s = scaled_arguments(cfg, 64);
  BigFloat c = pow(BigFloat(2), BigFloat(4) / BigFloat(3));
  EXPECT_LT(rel(s.mu, BigFloat(256) + c * BigFloat("0.5") * BigFloat(4)), 1e-70);
  EXPECT_LT(rel(s.radius, BigFloat("0.75")), 1e-70);
  EXPECT_LT(rel(s.normalization, c * BigFloat(4) * exp(-(s.mu + s.nu) / BigFloat(2))), 1e-70);

  cfg.regime = Regime::Hard;
  cfg.mu = BigFloat(1);
  cfg.nu = BigFloat(2);
  cfg.alpha = 1;
  cfg.ensemble = EnsembleSpec::gaussian(Variant::Real);
  s = scaled_arguments(cfg, 10);
  EXPECT_LT(rel(s.mu, BigFloat(1) / BigFloat(40)), 1e-70);
  EXPECT_LT(rel(s.normalization, sqrt(s.mu * s.nu) / BigFloat(1600)), 1e-70);

  cfg.regime = Regime::Bulk;
  cfg.xi = BigFloat(2);
  cfg.alpha = 0;
  s = scaled_arguments(cfg, 10);
  BigFloat g = mp_density(BigFloat(2));
  EXPECT_LT(rel(s.mu, BigFloat(20) + BigFloat(1) / g), 1e-70);
  EXPECT_LT(rel(s.normalization, exp(-(s.mu + s.nu) / BigFloat(2)) / (BigFloat(20) * g * g * g)), 1e-70);

  cfg.xi = BigFloat(4);
  EXPECT_THROW(scaled_arguments(cfg, 10), std::invalid_argument);
  cfg.regime = Regime::Hard;
  cfg.mu = BigFloat(-1);
  EXPECT_THROW(scaled_arguments(cfg, 10), std::invalid_argument);
}

TEST(LimitScan, PredictedLimits) {
  RegimeConfig cfg;
  cfg.mu = BigFloat("0.7");
  cfg.nu = BigFloat("0.7");
  cfg.ensemble = EnsembleSpec::complex(Rational(2));
  EXPECT_LT(rel(predicted_limit(cfg), exp(BigFloat(Rational(5, 2)))), 1e-60);
  cfg.regime = Regime::Hard;
  cfg.mu = BigFloat(1);
  cfg.nu = BigFloat(2);
  cfg.ensemble = EnsembleSpec::gaussian(Variant::Complex);
  EXPECT_LT(rel(predicted_limit(cfg), BigFloat("0.1715723369389569134562228193122430383248")), 1e-30);
}

TEST(LimitScan, ContourAndRecursionMethodsAgree) {
  for (Regime r : {Regime::Bulk, Regime::Soft, Regime::Hard}) {
    for (Variant v : {Variant::Complex, Variant::Real}) {
      RegimeConfig cfg;
      cfg.regime = r;
      cfg.mu = BigFloat(r == Regime::Hard ? 1.0 : 0.4);
      cfg.nu = BigFloat(r == Regime::Hard ? 2.0 : -0.3);
      cfg.alpha = 1;
      cfg.ensemble = EnsembleSpec(v, v == Variant::Real ? Rational(4) : Rational(1));
      ScanRow a = scaled_value(cfg, 24, 1);
      cfg.method = ScanMethod::Recursion;
      ScanRow b = scaled_value(cfg, 24, 1);
      EXPECT_LT(rel(a.scaled_value, b.scaled_value), 1e-10) << to_string(r);
      EXPECT_GT(a.nodes_used, 0);
      EXPECT_EQ(b.nodes_used, 0);
    }
  }
}

TEST(LimitScan, HardEdgeApproachesBesselKernel) {
  RegimeConfig cfg;
  cfg.regime = Regime::Hard;
  cfg.mu = BigFloat(1);
  cfg.nu = BigFloat(2);
  cfg.ensemble = EnsembleSpec::complex(Rational(1));
  auto rows = limit_scan(cfg, {20, 40, 80}, 1);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_GT(rows[0].abs_error, rows[1].abs_error);
  EXPECT_GT(rows[1].abs_error, rows[2].abs_error);
  EXPECT_LT((rows[2].abs_error / rows[2].predicted_limit).to_double(), 0.05);
  std::ostringstream csv;
  write_scan_csv(csv, rows);
  const std::string text = csv.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "N,scaled_value,predicted_limit,abs_error,nodes_used,precision_bits");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
}

TEST(Identities, LaplaceSine) {
  auto c = laplace_sine_identity_check(BigFloat(2), BigFloat(1));
  EXPECT_LT(rel(c.closed_form, sin(BigFloat(2)) / sqrt(pi())), 1e-60);
  EXPECT_NEAR(c.closed_form.to_double(), 0.513016, 1e-6);
  EXPECT_LT(c.abs_error().to_double(), 1e-8);
  EXPECT_LT(laplace_sine_identity_check(BigFloat(1), BigFloat("0.25")).abs_error().to_double(), 1e-8);
  // a -> 0: right side tends to 2 sqrt(t / pi)
  auto small = laplace_sine_identity_check(BigFloat("1e-6"), BigFloat(3));
  EXPECT_LT(abs(small.closed_form - BigFloat(2) * sqrt(BigFloat(3) / pi())).to_double(), 1e-10);
  EXPECT_LT(small.rel_error().to_double(), 1e-8);
  EXPECT_THROW(laplace_sine_identity_check(BigFloat(0), BigFloat(1)), std::invalid_argument);
}

TEST(Identities, BesselProduct) {
  EXPECT_LT(bessel_product_identity_check(0, BigFloat(1), BigFloat(2)).rel_error().to_double(), 1e-10);
  EXPECT_LT(bessel_product_identity_check(1, BigFloat(4), BigFloat(1)).rel_error().to_double(), 1e-10);
  // mu -> nu: both sides approach the Bessel-kernel diagonal
  BigFloat diag = kernel_diagonal(KernelKind::Bessel, BigFloat(2), 1);
  auto near = bessel_product_identity_check(1, BigFloat(2) + BigFloat("1e-7"), BigFloat(2));
  EXPECT_LT(abs(near.quadrature - diag).to_double(), 1e-7);
  EXPECT_LT(abs(near.closed_form - diag).to_double(), 1e-7);
  EXPECT_THROW(bessel_product_identity_check(0, BigFloat(1), BigFloat(1)), std::invalid_argument);
}

TEST(Identities, AiryIntegral) {
  EXPECT_LT(airy_integral_identity_check(BigFloat(0.5), BigFloat(-0.5)).abs_error().to_double(), 1e-8);
  EXPECT_LT(airy_integral_identity_check(BigFloat(1), BigFloat(0)).abs_error().to_double(), 1e-8);
  auto a = airy_integral_identity_check(BigFloat(1.3), BigFloat(-0.4));
  auto b = airy_integral_identity_check(BigFloat(-0.4), BigFloat(1.3));
  EXPECT_LT(rel(a.quadrature, b.quadrature), 1e-60);
}

}  // namespace
}  // namespace cplab
