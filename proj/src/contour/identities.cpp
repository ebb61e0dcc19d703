#include "cplab/contour/identities.hpp"

#include <stdexcept>

#include "cplab/contour/quadrature.hpp"
#include "cplab/kernels/kernels.hpp"
#include "cplab/polycore/complex.hpp"
#include "cplab/specfun/bessel.hpp"

namespace cplab {
namespace {

// z^{-3/2} on the principal branch
Complex inverse_three_halves(const Complex& z) { return exp(log(z) * BigFloat(-1.5)); }

}  // namespace

IdentityCheck laplace_sine_identity_check(const BigFloat& a, const BigFloat& t, double tolerance) {
  if (a.sign() <= 0 || t.sign() <= 0) throw std::invalid_argument("laplace identity: need a, t > 0");
  const BigFloat scale = BigFloat(1) / t;
  const BigFloat a2 = a * a / BigFloat(4);
  // z(u) = s (1 + iu)^2, dz = 2 i s (1 + iu) du; the factor i is divided out
  // here so that g(-u) = conj(g(u))
  auto g = [&](const BigFloat& u) {
    Complex w(BigFloat(1), u);
    Complex z = scale * w * w;
    return exp(t * z - a2 / z) * inverse_three_halves(z) * (BigFloat(2) * scale) * w;
  };
  QuadratureOptions options;
  options.tolerance = tolerance;
  options.conjugate_symmetric = true;
  options.threads = 1;
  LineQuadratureResult r = line_trapezoid(g, options);
  IdentityCheck out;
  out.quadrature = r.value.re / (BigFloat(2) * pi());
  out.closed_form = BigFloat(2) * sin(a * sqrt(t)) / (sqrt(pi()) * a);
  out.nodes_used = r.nodes_used;
  return out;
}

IdentityCheck bessel_product_identity_check(int alpha, const BigFloat& mu, const BigFloat& nu, double tolerance) {
  if (mu.sign() <= 0 || nu.sign() <= 0) throw std::invalid_argument("bessel identity: need mu, nu > 0");
  if (mu == nu) throw std::invalid_argument("bessel identity: need mu != nu");
  const BigFloat radius = BigFloat(2) * (sqrt(mu) + sqrt(nu));
  const BigFloat sum = mu + nu;
  const BigFloat root = BigFloat(2) * sqrt(mu * nu);
  // (1/2 pi i) \oint F dz = (1/2 pi) \int F(z) z dt
  auto g = [&](const BigFloat& t) {
    Complex z = Complex::polar(radius, t);
    Complex inv = Complex(BigFloat(1)) / z;
    return exp(z / BigFloat(4) - sum * inv) * bessel_i(alpha, root * inv) * inv;
  };
  QuadratureOptions options;
  options.tolerance = tolerance;
  options.initial_nodes = 64;
  options.conjugate_symmetric = true;
  options.threads = 1;
  QuadratureResult r = periodic_trapezoid(g, options);
  IdentityCheck out;
  out.quadrature = r.value.re;
  out.closed_form = kernel_direct(KernelKind::Bessel, mu, nu, alpha);
  out.nodes_used = r.nodes_used;
  return out;
}

IdentityCheck airy_integral_identity_check(const BigFloat& mu, const BigFloat& nu, double tolerance) {
  if (mu == nu) throw std::invalid_argument("airy identity: need mu != nu");
  const BigFloat half_sum = (mu + nu) / BigFloat(2);
  const BigFloat quarter_d2 = (mu - nu) * (mu - nu) / BigFloat(4);
  // z = 1 + iy, dz = i dy; the i cancels against the prefactor's 1/i
  auto g = [&](const BigFloat& y) {
    Complex z(BigFloat(1), y);
    Complex e = z * z * z / BigFloat(12) - half_sum * z - quarter_d2 / z;
    return exp(e) * inverse_three_halves(z);
  };
  QuadratureOptions options;
  options.tolerance = tolerance;
  options.conjugate_symmetric = true;
  options.threads = 1;
  LineQuadratureResult r = line_trapezoid(g, options, 4.0);
  IdentityCheck out;
  out.quadrature = r.value.re / (BigFloat(4) * pow(pi(), BigFloat(1.5)));
  out.closed_form = kernel_direct(KernelKind::Airy, mu, nu);
  out.nodes_used = r.nodes_used;
  return out;
}

}  // namespace cplab
