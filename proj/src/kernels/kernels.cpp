#include "cplab/kernels/kernels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <vector>

#include "cplab/specfun/airy.hpp"
#include "cplab/specfun/bessel.hpp"

namespace cplab {
namespace {

std::string lower(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool is_bessel(KernelKind kind) { return kind == KernelKind::Bessel || kind == KernelKind::BesselDiff; }

void check_domain(KernelKind kind, const BigFloat& x, const BigFloat& y, int alpha) {
  if (!is_bessel(kind)) return;
  if (alpha < 0) throw std::domain_error("Bessel kernel needs alpha >= 0");
  if (x.sign() <= 0 || y.sign() <= 0) throw std::domain_error("Bessel kernel is defined for x, y > 0");
}

// Extra bits for the direct formulas: the differentiated kernels divide an
// O(d^3) numerator by d^3.
mpfr_prec_t direct_guard_bits(const BigFloat& d) {
  long e = d.is_zero() ? 0 : d.exponent();
  return 32 + 3 * std::max(0L, -e);
}

// Truncated power series in d, coefficients of d^0 .. d^{kOrder-1}.
constexpr int kOrder = 6;
using Series = std::vector<BigFloat>;

Series mul(const Series& a, const Series& b) {
  Series r(kOrder, BigFloat(0));
  for (int i = 0; i < kOrder; ++i) {
    for (int j = 0; i + j < kOrder; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series axpy(const BigFloat& s, const Series& a, const Series& b) {
  Series r(kOrder);
  for (int i = 0; i < kOrder; ++i) r[i] = s * a[i] + b[i];
  return r;
}

Series scaled(const Series& a, const BigFloat& s) {
  Series r(kOrder);
  for (int i = 0; i < kOrder; ++i) r[i] = a[i] * s;
  return r;
}

// f(m + sign * d / 2) from derivatives f^{(k)}(m), starting at f^{(shift)}.
Series taylor(const std::vector<BigFloat>& derivs, int sign, int shift) {
  Series r(kOrder);
  BigFloat factor(1);
  for (int k = 0; k < kOrder; ++k) {
    r[k] = derivs[k + shift] * factor;
    factor = factor * BigFloat(sign) / BigFloat(2 * (k + 1));
  }
  return r;
}

Series linear(const BigFloat& c0, const BigFloat& c1) {
  Series r(kOrder, BigFloat(0));
  r[0] = c0;
  r[1] = c1;
  return r;
}

// c_p + c_{p+1} d + c_{p+2} d^2 for a numerator that vanishes to order p.
BigFloat quadratic_tail(const Series& s, int p, const BigFloat& d) {
  return s[p] + d * (s[p + 1] + d * s[p + 2]);
}

BigFloat direct(KernelKind kind, const BigFloat& x, const BigFloat& y, int alpha) {
  BigFloat u = x - y;
  switch (kind) {
    case KernelKind::Sine: {
      BigFloat t = pi() * u;
      return sin(t) / t;
    }
    case KernelKind::SineDiff: {
      BigFloat t = pi() * u;
      return BigFloat(2) * sin(t) / (pi() * u * u * u) - BigFloat(2) * cos(t) / (u * u);
    }
    case KernelKind::Airy:
    case KernelKind::AiryDiff: {
      AiryValue ax = airy(x);
      AiryValue ay = airy(y);
      BigFloat cross = ax.ai * ay.ai_prime - ax.ai_prime * ay.ai;
      if (kind == KernelKind::Airy) return cross / u;
      return BigFloat(2) * cross / (u * u * u) +
             ((x + y) * ax.ai * ay.ai - BigFloat(2) * ax.ai_prime * ay.ai_prime) / (u * u);
    }
    case KernelKind::Bessel:
    case KernelKind::BesselDiff: {
      BigFloat rx = sqrt(x);
      BigFloat ry = sqrt(y);
      BesselJValue jx = bessel_j(alpha, rx);
      BesselJValue jy = bessel_j(alpha, ry);
      BigFloat cross = jx.value * ry * jy.derivative - rx * jx.derivative * jy.value;
      if (kind == KernelKind::Bessel) return cross / (BigFloat(2) * u);
      BigFloat a2(alpha * alpha);
      return (x + y) * cross / (BigFloat(2) * u * u * u) -
             ((x + y - BigFloat(2) * a2) * jx.value * jy.value + BigFloat(2) * rx * ry * jx.derivative * jy.derivative) /
                 (BigFloat(4) * u * u);
    }
  }
  throw std::logic_error("unknown kernel kind");
}

// Ai^{(k)}(m) for k < n from Ai'' = x Ai.
std::vector<BigFloat> airy_derivatives(const BigFloat& m, int n) {
  AiryValue a = airy(m);
  std::vector<BigFloat> d{a.ai, a.ai_prime};
  for (int k = 0; static_cast<int>(d.size()) < n; ++k) {
    BigFloat next = m * d[k];
    if (k >= 1) next += BigFloat(k) * d[k - 1];
    d.push_back(next);
  }
  return d;
}

// u^{(k)}(m) for u(x) = J_alpha(sqrt x), from 4x^2 u'' + 4x u' + (x - alpha^2) u = 0
// differentiated k times.
std::vector<BigFloat> bessel_sqrt_derivatives(int alpha, const BigFloat& m, int n) {
  BigFloat r = sqrt(m);
  BesselJValue j = bessel_j(alpha, r);
  std::vector<BigFloat> d{j.value, j.derivative / (BigFloat(2) * r)};
  BigFloat a2(alpha * alpha);
  BigFloat denom = BigFloat(4) * m * m;
  for (int k = 0; static_cast<int>(d.size()) < n; ++k) {
    BigFloat acc = BigFloat(8 * k + 4) * m * d[k + 1] + (BigFloat(4 * k * k) + m - a2) * d[k];
    if (k >= 1) acc += BigFloat(k) * d[k - 1];
    d.push_back(-acc / denom);
  }
  return d;
}

}  // namespace

std::string to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::Sine: return "sine";
    case KernelKind::Airy: return "airy";
    case KernelKind::Bessel: return "bessel";
    case KernelKind::SineDiff: return "sine2";
    case KernelKind::AiryDiff: return "airy2";
    case KernelKind::BesselDiff: return "bessel2";
  }
  return "?";
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::Bulk: return "bulk";
    case Regime::Soft: return "soft";
    case Regime::Hard: return "hard";
  }
  return "?";
}

KernelKind parse_kernel_kind(std::string_view text) {
  std::string s = lower(text);
  for (KernelKind k : {KernelKind::Sine, KernelKind::Airy, KernelKind::Bessel, KernelKind::SineDiff,
                       KernelKind::AiryDiff, KernelKind::BesselDiff}) {
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown kernel '" + std::string(text) + "'");
}

Regime parse_regime(std::string_view text) {
  std::string s = lower(text);
  for (Regime r : {Regime::Bulk, Regime::Soft, Regime::Hard}) {
    if (s == to_string(r)) return r;
  }
  throw std::invalid_argument("unknown regime '" + std::string(text) + "'");
}

bool is_differentiated(KernelKind kind) {
  return kind == KernelKind::SineDiff || kind == KernelKind::AiryDiff || kind == KernelKind::BesselDiff;
}

KernelKind base_kernel(Regime regime) {
  switch (regime) {
    case Regime::Bulk: return KernelKind::Sine;
    case Regime::Soft: return KernelKind::Airy;
    case Regime::Hard: return KernelKind::Bessel;
  }
  throw std::logic_error("unknown regime");
}

KernelKind differentiated_kernel(Regime regime) {
  switch (regime) {
    case Regime::Bulk: return KernelKind::SineDiff;
    case Regime::Soft: return KernelKind::AiryDiff;
    case Regime::Hard: return KernelKind::BesselDiff;
  }
  throw std::logic_error("unknown regime");
}

Regime regime_of(KernelKind kind) {
  switch (kind) {
    case KernelKind::Sine:
    case KernelKind::SineDiff: return Regime::Bulk;
    case KernelKind::Airy:
    case KernelKind::AiryDiff: return Regime::Soft;
    case KernelKind::Bessel:
    case KernelKind::BesselDiff: return Regime::Hard;
  }
  throw std::logic_error("unknown kernel kind");
}

BigFloat mp_density(const BigFloat& xi) {
  if (!(xi.sign() > 0 && xi < BigFloat(4))) {
    throw std::domain_error("Marchenko-Pastur density needs 0 < xi < 4, got " + xi.to_string(10));
  }
  return sqrt(xi * (BigFloat(4) - xi)) / (BigFloat(2) * pi() * xi);
}

BigFloat kernel_eval(const KernelPoint& p) {
  check_domain(p.kind, p.x, p.y, p.alpha);
  if (abs(p.x - p.y) < p.near_diag_threshold) return kernel_near_diagonal(p.kind, p.x, p.y, p.alpha);
  return kernel_direct(p.kind, p.x, p.y, p.alpha);
}

BigFloat kernel_direct(KernelKind kind, const BigFloat& x, const BigFloat& y, int alpha) {
  check_domain(kind, x, y, alpha);
  if (x == y) throw std::domain_error("direct kernel formula needs x != y");
  BigFloat result;
  {
    PrecisionGuard guard(working_precision() + direct_guard_bits(x - y));
    result = direct(kind, x, y, alpha);
  }
  return result.rounded();
}

BigFloat kernel_near_diagonal(KernelKind kind, const BigFloat& x, const BigFloat& y, int alpha) {
  check_domain(kind, x, y, alpha);
  BigFloat m = (x + y) / BigFloat(2);
  BigFloat d = x - y;
  switch (kind) {
    case KernelKind::Sine: {
      BigFloat p2 = pi() * pi();
      return BigFloat(1) - p2 * d * d / BigFloat(6);
    }
    case KernelKind::SineDiff: {
      BigFloat p2 = pi() * pi();
      return BigFloat(2) * p2 / BigFloat(3) - p2 * p2 * d * d / BigFloat(15);
    }
    case KernelKind::Airy:
    case KernelKind::AiryDiff: {
      std::vector<BigFloat> der = airy_derivatives(m, kOrder + 1);
      Series fx = taylor(der, 1, 0), fy = taylor(der, -1, 0);
      Series gx = taylor(der, 1, 1), gy = taylor(der, -1, 1);
      Series cross = axpy(BigFloat(-1), mul(gx, fy), mul(fx, gy));
      if (kind == KernelKind::Airy) return quadratic_tail(cross, 1, d);
      Series even = axpy(BigFloat(-2), mul(gx, gy), scaled(mul(fx, fy), BigFloat(2) * m));
      Series num(kOrder, BigFloat(0));
      // align (2 cross)/d^3 with even/d^2 by shifting the latter one order up
      for (int k = 0; k + 1 < kOrder; ++k) num[k + 1] = even[k];
      num = axpy(BigFloat(2), cross, num);
      return quadratic_tail(num, 3, d);
    }
    case KernelKind::Bessel:
    case KernelKind::BesselDiff: {
      std::vector<BigFloat> der = bessel_sqrt_derivatives(alpha, m, kOrder + 1);
      Series ux = taylor(der, 1, 0), uy = taylor(der, -1, 0);
      // B(x) = sqrt(x) J'(sqrt x) = 2 x u'(x)
      Series bx = scaled(mul(linear(m, BigFloat(1) / BigFloat(2)), taylor(der, 1, 1)), BigFloat(2));
      Series by = scaled(mul(linear(m, BigFloat(-1) / BigFloat(2)), taylor(der, -1, 1)), BigFloat(2));
      Series cross = axpy(BigFloat(-1), mul(bx, uy), mul(ux, by));
      if (kind == KernelKind::Bessel) return quadratic_tail(cross, 1, d) / BigFloat(2);
      // (2m) cross / (2 d^3) - ((2m - 2 alpha^2) ux uy + 2 bx by) / (4 d^2)
      BigFloat a2(alpha * alpha);
      Series even = axpy(BigFloat(2), mul(bx, by), scaled(mul(ux, uy), BigFloat(2) * (m - a2)));
      Series num(kOrder, BigFloat(0));
      for (int k = 0; k + 1 < kOrder; ++k) num[k + 1] = even[k] / BigFloat(-4);
      num = axpy(m, cross, num);
      return quadratic_tail(num, 3, d);
    }
  }
  throw std::logic_error("unknown kernel kind");
}

BigFloat kernel_diagonal(KernelKind kind, const BigFloat& x, int alpha) {
  check_domain(kind, x, x, alpha);
  switch (kind) {
    case KernelKind::Sine: return BigFloat(1);
    case KernelKind::SineDiff: return BigFloat(2) * pi() * pi() / BigFloat(3);
    case KernelKind::Airy: {
      AiryValue a = airy(x);
      return a.ai_prime * a.ai_prime - x * a.ai * a.ai;
    }
    case KernelKind::AiryDiff: {
      AiryValue a = airy(x);
      return (BigFloat(2) * x * x * a.ai * a.ai - a.ai * a.ai_prime - BigFloat(2) * x * a.ai_prime * a.ai_prime) /
             BigFloat(3);
    }
    case KernelKind::Bessel: {
      BesselJValue j = bessel_j(alpha, sqrt(x));
      BigFloat a2(alpha * alpha);
      return (j.derivative * j.derivative + (BigFloat(1) - a2 / x) * j.value * j.value) / BigFloat(4);
    }
    case KernelKind::BesselDiff: {
      BigFloat r = sqrt(x);
      BesselJValue j = bessel_j(alpha, r);
      BigFloat a2(alpha * alpha);
      BigFloat c_jj = BigFloat(1) - BigFloat(2) * a2 / x + a2 * (a2 - BigFloat(1)) / (x * x);
      BigFloat c_dd = BigFloat(1) + (BigFloat(1) - a2) / x;
      return (c_jj * j.value * j.value + j.value * j.derivative / r + c_dd * j.derivative * j.derivative) /
             BigFloat(24);
    }
  }
  throw std::logic_error("unknown kernel kind");
}

BigFloat apply_D_numeric(Regime regime, const BigFloat& x, const BigFloat& y, const BigFloat& h, int alpha,
                         double tolerance) {
  if (!(h.sign() > 0)) throw std::invalid_argument("apply_D_numeric: step must be positive");
  BigFloat gap = abs(x - y);
  if (BigFloat(4) * h > gap) throw std::invalid_argument("apply_D_numeric: step must satisfy 4h <= |x - y|");
  KernelKind base = base_kernel(regime);
  if (regime == Regime::Hard && (x - BigFloat(2) * h <= BigFloat(0) || y - BigFloat(2) * h <= BigFloat(0))) {
    throw std::domain_error("apply_D_numeric: stencil leaves the hard-edge domain");
  }
  BigFloat result;
  BigFloat estimate;
  {
    PrecisionGuard guard(working_precision() + 32);
    auto K = [&](const BigFloat& a, const BigFloat& b) {
      KernelPoint p;
      p.kind = base;
      p.x = a;
      p.y = b;
      p.alpha = alpha;
      return kernel_eval(p);
    };
    auto D = [&](const BigFloat& step) {
      BigFloat dx = (K(x + step, y) - K(x - step, y)) / (BigFloat(2) * step);
      BigFloat dy = (K(x, y + step) - K(x, y - step)) / (BigFloat(2) * step);
      if (regime == Regime::Hard) return (y * dy - x * dx) / (x - y);
      return (dy - dx) / (x - y);
    };
    result = D(h);
    // central differences err by c h^2, so D(2h) - D(h) is about 3 c h^2
    estimate = abs(D(BigFloat(2) * h) - result) / BigFloat(3);
  }
  if (estimate > BigFloat(tolerance)) {
    throw StepTooLarge("apply_D_numeric: estimated truncation error " + estimate.to_string(3) + " exceeds " +
                       BigFloat(tolerance).to_string(3));
  }
  return result.rounded();
}

}  // namespace cplab
