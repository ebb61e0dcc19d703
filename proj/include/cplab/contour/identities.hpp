#pragma once

#include "cplab/polycore/bigfloat.hpp"

namespace cplab {

/// Quadrature value of an integral identity next to its closed form.
struct IdentityCheck {
  BigFloat quadrature;
  BigFloat closed_form;
  int nodes_used = 0;

  BigFloat abs_error() const { return abs(quadrature - closed_form); }
  BigFloat rel_error() const { return relative_difference(quadrature, closed_form); }
};

/// (1/2 pi i) int e^{tz} e^{-a^2/(4z)} z^{-3/2} dz over a Bromwich path
/// against 2 sin(a sqrt t)/(sqrt(pi) a). The path is the parabola
/// z = (1/t)(1 + iu)^2, which the vertical line deforms into; a and t > 0.
IdentityCheck laplace_sine_identity_check(const BigFloat& a, const BigFloat& t, double tolerance = 1e-14);

/// (1/2 pi i) int exp(z/4 - (mu+nu)/z) I_alpha(2 sqrt(mu nu)/z) z^{-2} dz
/// against the Bessel kernel J_alpha(mu, nu). The integrand is analytic off
/// z = 0 and decays to the left, so the vertical line closes onto the circle
/// |z| = 2(sqrt mu + sqrt nu), where the periodic trapezoid rule is used.
IdentityCheck bessel_product_identity_check(int alpha, const BigFloat& mu, const BigFloat& nu,
                                            double tolerance = 1e-14);

/// (1/(4 pi^{3/2} i)) int_{1-i inf}^{1+i inf} exp(z^3/12 - (mu+nu) z/2 - (mu-nu)^2/(4z)) z^{-3/2} dz
/// against the Airy kernel A(mu, nu), on the line itself (Gaussian decay).
IdentityCheck airy_integral_identity_check(const BigFloat& mu, const BigFloat& nu, double tolerance = 1e-14);

}  // namespace cplab
