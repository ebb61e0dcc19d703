#pragma once

#include <stdexcept>

#include "cplab/polycore/bigfloat.hpp"

namespace cplab {

/// Controls the power-series / asymptotic switch of the special functions.
/// Zero fields mean "derive from the working precision".
struct SeriesPolicy {
  /// Target precision in bits; 0 uses the calling thread's working precision.
  mpfr_prec_t precision = 0;
  /// |argument| at and beyond which the asymptotic expansion is used; 0 means
  /// max(30, precision / 2) for I_alpha and J_alpha. For Airy functions the
  /// switch is expressed through zeta = (2/3)|x|^{3/2} >= max(15, 0.35 precision).
  double crossover = 0;
  /// Term budget for either expansion.
  int max_terms = 200000;

  mpfr_prec_t effective_precision() const { return precision > 0 ? precision : working_precision(); }
  double bessel_crossover() const;
  double airy_zeta_crossover() const;
};

/// Raised when an expansion does not reach the target accuracy within its
/// term budget (or an asymptotic series diverges before converging).
class SeriesNotConverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cplab
