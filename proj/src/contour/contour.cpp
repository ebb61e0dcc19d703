#include "cplab/contour/contour.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cplab/specfun/bessel.hpp"

namespace cplab {
namespace {

Complex integrand_core(const ContourSpec& spec, const Complex& z, const Complex& log_z, const BigFloat& mu,
                       const BigFloat& nu, const EnsembleSpec& ensemble, IntegrandRoute route) {
  const int alpha = spec.alpha();
  const int p = ensemble.pole_order();
  const Complex one_minus = Complex(BigFloat(1)) - z;
  const BigFloat mn = mu * nu;
  Complex exponent = -(mu + nu) * (z / one_minus) + BigFloat(ensemble.bstar()) * z;
  Complex head = exp(exponent - BigFloat(spec.m + 1) * log_z);

  if (route == IntegrandRoute::Auto) {
    Complex q = mn * z / (one_minus * one_minus);
    SeriesPolicy policy;
    double w = 2.0 * std::sqrt(abs(q).to_double());
    route = w < policy.bessel_crossover() ? IntegrandRoute::Series : IntegrandRoute::Bessel;
  }
  if (route == IntegrandRoute::Bessel && mn.is_zero()) route = IntegrandRoute::Series;

  if (route == IntegrandRoute::Series) {
    Complex q = mn * z / (one_minus * one_minus);
    return head * bessel_phi_series(alpha, q) * pow(one_minus, -(alpha + p));
  }
  // s = (mu nu z)^{1/2} with the principal root of z; sqrt(mu nu) is imaginary
  // when mu nu < 0, which leaves s^{-alpha} I_alpha(2s/(1-z)) unchanged.
  Complex root_mn = mn.sign() >= 0 ? Complex(sqrt(mn)) : Complex(BigFloat(0), sqrt(-mn));
  Complex s = root_mn * sqrt(z);
  Complex w = BigFloat(2) * s / one_minus;
  return head * bessel_i(alpha, w) / pow(s, alpha) * pow(one_minus, -p);
}

}  // namespace

ContourSpec ContourSpec::for_size(int N, int alpha, const BigFloat& radius) {
  ContourSpec spec;
  spec.n = N;
  spec.m = N - alpha;
  spec.radius = radius;
  return spec;
}

void ContourSpec::validate() const {
  if (m < 0 || n < m) throw std::invalid_argument("contour: need n >= m >= 0");
  if (!(radius.sign() > 0 && radius < BigFloat(1))) {
    throw std::invalid_argument("contour: radius must lie in (0, 1), got " + radius.to_string(10));
  }
  if (node_count < 256 || (node_count & (node_count - 1)) != 0) {
    throw std::invalid_argument("contour: node_count must be a power of two >= 256");
  }
  if (max_nodes < node_count) throw std::invalid_argument("contour: max_nodes below node_count");
  if (precision != 0 && precision < 64) throw std::invalid_argument("contour: precision below 64 bits");
}

Complex contour_integrand(const ContourSpec& spec, const BigFloat& t, const BigFloat& mu, const BigFloat& nu,
                          const EnsembleSpec& ensemble, IntegrandRoute route) {
  Complex z = Complex::polar(spec.radius, t);
  Complex log_z(log(spec.radius), t);
  return integrand_core(spec, z, log_z, mu, nu, ensemble, route);
}

Complex contour_integrand_at(const ContourSpec& spec, const Complex& z, const BigFloat& mu, const BigFloat& nu,
                             const EnsembleSpec& ensemble, IntegrandRoute route) {
  return integrand_core(spec, z, log(z), mu, nu, ensemble, route);
}

ContourResult contour_integral(const ContourSpec& spec, const BigFloat& mu, const BigFloat& nu,
                               const EnsembleSpec& ensemble, IntegrandRoute route) {
  spec.validate();
  const mpfr_prec_t bits = spec.precision > 0 ? spec.precision : working_precision();
  ContourResult out;
  {
    PrecisionGuard guard(bits);
    const BigFloat radius = spec.radius.rounded();
    const BigFloat log_r = log(radius);
    const BigFloat mu_w = mu.rounded();
    const BigFloat nu_w = nu.rounded();
    // (1/2 pi i) \oint F dz = (1/2 pi) \int F(z) z dt on z = R e^{it}
    auto g = [&](const BigFloat& t) {
      Complex z = Complex::polar(radius, t);
      return integrand_core(spec, z, Complex(log_r, t), mu_w, nu_w, ensemble, route) * z;
    };
    QuadratureOptions options;
    options.tolerance = spec.tolerance;
    options.initial_nodes = spec.node_count;
    options.max_nodes = spec.max_nodes;
    // fewer than m + 1 nodes alias lower coefficients onto z^m
    options.min_nodes = 2 * (spec.m + 1);
    options.conjugate_symmetric = spec.use_symmetry;
    options.threads = spec.threads;
    QuadratureResult q = periodic_trapezoid(g, options);
    BigFloat scale = abs(q.value.re);
    out.value = q.value.re;
    out.imag_residual = scale.is_zero() ? abs(q.value.im) : abs(q.value.im) / scale;
    out.estimated_rel_error = scale.is_zero() ? q.estimated_error : q.estimated_error / scale;
    out.nodes_used = q.nodes_used;
  }
  out.precision_bits = bits;
  if (out.imag_residual > BigFloat(spec.tolerance)) {
    throw std::runtime_error("contour: imaginary residual " + out.imag_residual.to_string(3) + " above tolerance");
  }
  return out;
}

}  // namespace cplab
