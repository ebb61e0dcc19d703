#pragma once

#include <vector>

#include "cplab/polycore/polynomial.hpp"
#include "cplab/polycore/rational.hpp"
#include "cplab/recursion/ensemble_spec.hpp"

namespace cplab {

/// Taylor coefficients c_alpha(0..m_max) of F_alpha(z), computed from the
/// three-term coefficient recursion (which couples alpha to alpha + 1),
/// starting from c_alpha(0) = 1/alpha!.
std::vector<BivariatePolynomial> gf_coeffs_recursive(const EnsembleSpec& ensemble, int alpha, int m_max);
BivariatePolynomial gf_coeff_recursive(const EnsembleSpec& ensemble, int alpha, int m);

/// Same coefficients by truncated power-series arithmetic on the closed form
///   exp(-(mu+nu) z/(1-z) + b* z) * sum_k (mu nu z)^k / ((k+alpha)! k!) (1-z)^{-2k-alpha-p},
/// with p = 2 (complex) or 3 (real).
std::vector<BivariatePolynomial> gf_coeffs_closed(const EnsembleSpec& ensemble, int alpha, int m_max);
BivariatePolynomial gf_coeff_closed(const EnsembleSpec& ensemble, int alpha, int m);

struct OdeCheckResult {
  bool ok = true;
  /// Index m of the first coefficient c_alpha(m) whose defining equation
  /// fails (the z^{m-1} coefficient of the ODE); -1 when ok.
  int mismatch_order = -1;
};

/// Checks, as exact truncated power series through z^{order}, the ODE
///   (1-z)^2 F_a' = (a+p)(1-z) F_a + b*(1-z)^2 F_a - (mu+nu) F_a + mu nu (1+z) F_{a+1}
/// on the closed-form series, symbolically in mu and nu. `bstar_shift` is
/// added to b* in the ODE only (not in the series), as a sensitivity control.
OdeCheckResult gf_ode_check(const EnsembleSpec& ensemble, int alpha, int order,
                            const Rational& bstar_shift = Rational(0));
/// As above with the series coefficients evaluated at the point (mu, nu).
OdeCheckResult gf_ode_check(const EnsembleSpec& ensemble, int alpha, int order, const Rational& mu,
                            const Rational& nu, const Rational& bstar_shift = Rational(0));

}  // namespace cplab
