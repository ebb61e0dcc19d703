#pragma once

#include "cplab/contour/quadrature.hpp"
#include "cplab/polycore/bigfloat.hpp"
#include "cplab/polycore/complex.hpp"
#include "cplab/recursion/ensemble_spec.hpp"

namespace cplab {

/// Circle z = R e^{it} on which f(n, m) / (n! m!) is extracted as the z^m
/// coefficient of the generating function F_alpha, alpha = n - m.
struct ContourSpec {
  int n = 1;
  int m = 1;
  BigFloat radius = BigFloat("0.5");
  /// Starting resolution; a power of two >= 256.
  int node_count = 256;
  int max_nodes = 1 << 20;
  /// Bits used for the integrand; 0 = the caller's working precision.
  mpfr_prec_t precision = 0;
  double tolerance = 1e-12;
  /// Sum only over Im z >= 0 (valid for real mu, nu, b).
  bool use_symmetry = true;
  unsigned threads = 0;

  /// n = N, m = N - alpha.
  static ContourSpec for_size(int N, int alpha, const BigFloat& radius);
  int alpha() const { return n - m; }
  /// Throws std::invalid_argument on R outside (0, 1), n < m, or a bad node count.
  void validate() const;
};

enum class IntegrandRoute {
  /// Series form below the Bessel crossover |w|, I_alpha form above it.
  Auto,
  /// Sum_k (mu nu z)^k (1-z)^{-2k-alpha} / ((k+alpha)! k!) for every z.
  Series,
  /// ((mu nu z)^{1/2})^{-alpha} I_alpha(2 (mu nu z)^{1/2} / (1-z)) with
  /// arg sqrt(z) in [-pi/2, pi/2].
  Bessel,
};

/// exp(-(mu+nu) z/(1-z) + b* z) ((mu nu z)^{1/2})^{-alpha} I_alpha(2 (mu nu z)^{1/2}/(1-z))
///   / ((1-z)^p z^{m+1}),
/// with p = 2 (complex) or 3 (real). `t` is the angle of z = R e^{it}; z^{m+1}
/// is formed as exp((m+1)(log R + i t)).
Complex contour_integrand(const ContourSpec& spec, const BigFloat& t, const BigFloat& mu, const BigFloat& nu,
                          const EnsembleSpec& ensemble, IntegrandRoute route = IntegrandRoute::Auto);

/// Same integrand at an arbitrary z inside the unit disc (principal log).
Complex contour_integrand_at(const ContourSpec& spec, const Complex& z, const BigFloat& mu, const BigFloat& nu,
                             const EnsembleSpec& ensemble, IntegrandRoute route = IntegrandRoute::Auto);

struct ContourResult {
  /// f(n, m; mu, nu) / (n! m!)
  BigFloat value;
  /// |Im| of the quadrature sum relative to |value|.
  BigFloat imag_residual;
  /// Change between the last two resolutions relative to |value|.
  BigFloat estimated_rel_error;
  int nodes_used = 0;
  mpfr_prec_t precision_bits = 0;
};

/// (1/2 pi i) times the closed integral of contour_integrand over |z| = R by
/// the periodic trapezoid rule with node doubling. Throws
/// QuadratureNotConverged when the node budget runs out and
/// std::runtime_error when the imaginary residual exceeds the tolerance.
ContourResult contour_integral(const ContourSpec& spec, const BigFloat& mu, const BigFloat& nu,
                               const EnsembleSpec& ensemble, IntegrandRoute route = IntegrandRoute::Auto);

}  // namespace cplab
