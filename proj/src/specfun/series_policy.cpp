#include "cplab/specfun/series_policy.hpp"

#include <algorithm>

namespace cplab {

double SeriesPolicy::bessel_crossover() const {
  if (crossover > 0) return crossover;
  return std::max(30.0, static_cast<double>(effective_precision()) / 2.0);
}

double SeriesPolicy::airy_zeta_crossover() const {
  if (crossover > 0) return crossover;
  return std::max(15.0, 0.35 * static_cast<double>(effective_precision()));
}

}  // namespace cplab
